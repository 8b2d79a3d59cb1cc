"""Minuscule detection, enumeration, dimensions and signs."""

from math import comb

import pytest

from mtkit import (
    CartanType,
    PreconditionError,
    Weight,
    build_root_datum,
    dual_weight,
    duality_sign,
    enumerate_minuscule,
    is_minuscule,
    pairing,
)


def test_is_minuscule_c3_std():
    d = build_root_datum(CartanType("C", 3))
    assert is_minuscule(d, Weight((1, 0, 0)))


def test_is_minuscule_rejects_doubled_weight():
    d = build_root_datum(CartanType("A", 3))
    assert not is_minuscule(d, Weight((2, 0, 0)))


def test_is_minuscule_zero_weight_rejected():
    d = build_root_datum(CartanType("A", 3))
    with pytest.raises(PreconditionError):
        is_minuscule(d, Weight((0, 0, 0)))


def test_f4_has_no_minuscule_weight():
    d = build_root_datum(CartanType("F4", 4))
    for i in range(4):
        w = Weight(tuple(1 if k == i else 0 for k in range(4)))
        assert not is_minuscule(d, w)


def test_g2_has_no_minuscule_weight():
    d = build_root_datum(CartanType("G2", 2))
    assert not is_minuscule(d, Weight((1, 0)))
    assert not is_minuscule(d, Weight((0, 1)))


def test_enumerate_b4():
    reps = enumerate_minuscule(CartanType("B", 4))
    assert [(r.name, r.dimension, r.sign) for r in reps] == [("Spin", 16, 1)]


def test_enumerate_c5():
    reps = enumerate_minuscule(CartanType("C", 5))
    assert [(r.name, r.dimension, r.sign) for r in reps] == [("Std", 10, -1)]


def test_enumerate_d6():
    reps = enumerate_minuscule(CartanType("D", 6))
    assert [(r.name, r.dimension, r.sign) for r in reps] == [
        ("Std", 12, 1), ("Spin-", 32, -1), ("Spin+", 32, -1),
    ]


def test_enumerate_exceptional_types():
    e6 = enumerate_minuscule(CartanType("E6", 6))
    assert [(r.weight_index, r.dimension, r.sign) for r in e6] == [(1, 27, 0), (6, 27, 0)]
    e7 = enumerate_minuscule(CartanType("E7", 7))
    assert [(r.weight_index, r.dimension, r.sign) for r in e7] == [(7, 56, -1)]
    assert enumerate_minuscule(CartanType("F4", 4)) == []
    assert enumerate_minuscule(CartanType("G2", 2)) == []


def test_sign_c_family_always_symplectic():
    for n in range(2, 9):
        d = build_root_datum(CartanType("C", n))
        assert duality_sign(d, Weight((1,) + (0,) * (n - 1))) == -1


def test_sign_a3_w2_orthogonal():
    d = build_root_datum(CartanType("A", 3))
    assert duality_sign(d, Weight((0, 1, 0))) == 1


def test_sign_b5_spin_symplectic():
    d = build_root_datum(CartanType("B", 5))
    assert duality_sign(d, Weight((0, 0, 0, 0, 1))) == -1


def test_sign_rejects_non_minuscule():
    d = build_root_datum(CartanType("B", 3))
    with pytest.raises(PreconditionError):
        duality_sign(d, Weight((1, 0, 0)))


def test_rep_invariants_small_sweep():
    for t in [CartanType("A", 4), CartanType("B", 3), CartanType("C", 4), CartanType("D", 4)]:
        d = build_root_datum(t)
        for rep in enumerate_minuscule(t):
            assert rep.dimension == len(rep.orbit)
            assert (rep.sign == 0) == (dual_weight(d, rep.highest_weight) != rep.highest_weight)
            # minuscule orbits pair into {-1, 0, 1} with every coroot, both classes
            for mu in rep.orbit:
                for i in range(len(d.coroots)):
                    assert pairing(d, mu, i) in (-1, 0, 1)
            for cls in d.classes:
                assert rep.quadratic_classes[cls] is True


def test_closed_form_dimensions_to_rank_six():
    for n in range(1, 7):
        for rep in enumerate_minuscule(CartanType("A", n)):
            assert rep.dimension == comb(n + 1, rep.weight_index)
    for n in range(2, 7):
        (rep,) = enumerate_minuscule(CartanType("B", n))
        assert (rep.weight_index, rep.dimension) == (n, 2**n)
        (rep,) = enumerate_minuscule(CartanType("C", n))
        assert (rep.weight_index, rep.dimension) == (1, 2 * n)
    for n in range(3, 7):
        std, minus, plus = enumerate_minuscule(CartanType("D", n))
        assert (std.weight_index, std.dimension) == (1, 2 * n)
        assert (minus.weight_index, minus.dimension) == (n - 1, 2 ** (n - 1))
        assert (plus.weight_index, plus.dimension) == (n, 2 ** (n - 1))
