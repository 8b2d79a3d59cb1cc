"""Drop computations and the symplectic-minuscule classifier."""

from math import comb

import pytest

from mtkit import (
    CandidateList,
    CartanType,
    NoSuchLengthClass,
    PreconditionError,
    classify_symplectic_minuscule,
    drop_spectrum,
    enumerate_minuscule,
    minuscule_rep,
    root_element_drop,
)
from mtkit.roots import pair_with_coroot


def test_a5_middle_long_drop():
    assert root_element_drop(minuscule_rep(CartanType("A", 5), 3), "long") == 6


def test_c_std_long_drop_is_transvection():
    for g in (2, 3, 5, 8, 12):
        assert root_element_drop(minuscule_rep(CartanType("C", g), 1), "long") == 1


def test_b5_spin_both_classes():
    rep = minuscule_rep(CartanType("B", 5), 5)
    assert root_element_drop(rep, "short") == 16
    assert root_element_drop(rep, "long") == 8


def test_d6_halfspin_long_drop():
    assert root_element_drop(minuscule_rep(CartanType("D", 6), 6), "long") == 8


def test_c4_std_spectrum():
    report = drop_spectrum(minuscule_rep(CartanType("C", 4), 1))
    assert report.per_length_class == {"long": 1, "short": 2}
    assert report.quadratic == {"long": True, "short": True}


def test_a9_w5_spectrum():
    report = drop_spectrum(minuscule_rep(CartanType("A", 9), 5))
    assert report.per_length_class == {"long": 70}


def test_d6_std_spectrum():
    # Frozen from the defining weight count and the matrix oracle: exactly two
    # orbit weights (e1 and -e2) pair to +1 with the e1-e2 coroot, so the
    # minimal quadratic element of an even orthogonal standard rep has drop 2
    # (orthogonal groups have no transvections).
    report = drop_spectrum(minuscule_rep(CartanType("D", 6), 1))
    assert report.per_length_class == {"long": 2}


def test_missing_class_raises():
    rep = minuscule_rep(CartanType("A", 5), 3)
    with pytest.raises(NoSuchLengthClass):
        root_element_drop(rep, "short")
    with pytest.raises(NoSuchLengthClass):
        root_element_drop(rep, "medium")


def test_drop_bounds_when_quadratic():
    for t, j in [
        (CartanType("A", 6), 3), (CartanType("B", 5), 5),
        (CartanType("C", 6), 1), (CartanType("D", 5), 5),
    ]:
        rep = minuscule_rep(t, j)
        for cls, drop in drop_spectrum(rep).per_length_class.items():
            assert 1 <= drop <= rep.dimension // 2


def test_representative_independence_up_to_rank_eight():
    # every root of a length class gives the same weight count
    types = (
        [CartanType("A", n) for n in range(1, 9)]
        + [CartanType("B", n) for n in range(2, 9)]
        + [CartanType("C", n) for n in range(2, 9)]
        + [CartanType("D", n) for n in range(3, 9)]
    )
    for t in types:
        for rep in enumerate_minuscule(t):
            d = rep.datum
            counts = {}
            for idx, cls in enumerate(d.length_class):
                cr = d.coroots[idx]
                c = sum(1 for mu in rep.orbit if pair_with_coroot(cr, mu.coords) == 1)
                counts.setdefault(cls, set()).add(c)
            for cls, seen in counts.items():
                assert len(seen) == 1, (t, rep.name, cls, seen)
                assert seen == {root_element_drop(rep, cls)}


def _pairs(cl: CandidateList):
    return [(str(c.cartan_type), c.name) for c in cl.candidates]


def test_classify_20():
    assert _pairs(classify_symplectic_minuscule(20)) == [("A5", "Λ^3 Std"), ("C10", "Std")]


def test_classify_32():
    assert _pairs(classify_symplectic_minuscule(32)) == [
        ("B5", "Spin"), ("C16", "Std"), ("D6", "Spin-"), ("D6", "Spin+"),
    ]


def test_classify_8_excludes_orthogonal_spins():
    # B3 spin and D4 half-spins have sign +1 and must not appear
    assert _pairs(classify_symplectic_minuscule(8)) == [("C4", "Std")]


def test_classify_candidates_really_are_symplectic_of_that_dimension():
    for two_g in (2, 4, 6, 8, 12, 16, 20, 32, 64):
        cl = classify_symplectic_minuscule(two_g)
        for c in cl.candidates:
            rep = minuscule_rep(c.cartan_type, c.weight_index)
            assert rep.dimension == two_g
            assert rep.sign == -1


def test_classify_rejects_odd():
    with pytest.raises(PreconditionError):
        classify_symplectic_minuscule(7)
    with pytest.raises(PreconditionError):
        classify_symplectic_minuscule(0)


def _symplectic_reps_up_to_dim(max_dim, c_ranks):
    """All symplectic minuscule reps of dimension <= max_dim.

    A: central-binomial middle powers; B: spins to 2^n <= max_dim; D: spins;
    C: the supplied rank list (the C family contributes one transvection rep
    per even dimension, so the sweep is capped and spot-checked).
    """
    reps = []
    j = 1
    while comb(2 * j, j) <= max_dim:
        reps.extend(enumerate_minuscule(CartanType("A", 2 * j - 1)))
        j += 1
    n = 2
    while 2**n <= max_dim:
        reps.extend(enumerate_minuscule(CartanType("B", n)))
        n += 1
    n = 3
    while 2 ** (n - 1) <= max_dim:
        reps.extend(enumerate_minuscule(CartanType("D", n)))
        n += 1
    for n in c_ranks:
        reps.extend(enumerate_minuscule(CartanType("C", n)))
    return [r for r in reps if r.sign == -1 and r.dimension <= max_dim]


# Spin_5 = Sp_4 and SL_2 = Sp_2: these reps are the symplectic standard
# representation in disguise, so their transvection classes are expected.
_SP_STD_IN_DISGUISE = {("A", 1, 1), ("B", 2, 2)}


def test_hall_consistency_drop_one_only_for_symplectic_std():
    # exhaustive for A/B/D up to dim 256; C exhaustive to rank 32 plus spot
    # ranks covering the upper dimension range
    reps = _symplectic_reps_up_to_dim(256, list(range(2, 33)) + [48, 64, 128])
    for rep in reps:
        t = rep.cartan_type
        is_sp_std = (t.family == "C" and rep.weight_index == 1) or (
            (t.family, t.rank, rep.weight_index) in _SP_STD_IN_DISGUISE
        )
        for cls, drop in drop_spectrum(rep).per_length_class.items():
            if drop == 1:
                assert is_sp_std, (t, rep.name, cls)


def test_minimal_drop_floor_six_outside_symplectic_std():
    reps = _symplectic_reps_up_to_dim(256, list(range(2, 33)))
    for rep in reps:
        t = rep.cartan_type
        if t.family == "C" or (t.family, t.rank, rep.weight_index) in _SP_STD_IN_DISGUISE:
            continue
        for drop in drop_spectrum(rep).per_length_class.values():
            assert drop >= 6, (t, rep.name)
