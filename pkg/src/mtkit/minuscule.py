"""Minuscule weight detection, enumeration, dimensions and duality signs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .roots import (
    CartanType,
    RootDatum,
    Weight,
    build_root_datum,
    dual_weight,
    pair_with_coroot,
    weyl_orbit,
)

# Largest rank swept by the exhaustive table-reproduction tests.  The
# biggest orbit this forces is a few thousand weights, which keeps the
# whole sweep in the low seconds.
DEFAULT_RANK_BOUND = 12


@dataclass
class MinusculeRep:
    """A minuscule highest weight together with its fully expanded orbit.

    sign is +1 for orthogonal, -1 for symplectic, 0 for non-self-dual.
    quadratic_classes records, per root-length class, whether every orbit
    weight pairs into {-1, 0, 1} with that class (what the drop machinery
    needs to treat a root element as quadratic).
    """

    datum: RootDatum
    highest_weight: Weight
    name: str
    dimension: int
    sign: int
    orbit: tuple[Weight, ...] = field(repr=False)
    quadratic_classes: dict[str, bool] = field(repr=False)

    @property
    def cartan_type(self) -> CartanType:
        return self.datum.cartan_type

    @property
    def weight_index(self) -> int:
        """1-based fundamental-weight index of the highest weight."""
        return self.highest_weight.coords.index(1) + 1


def is_minuscule(d: RootDatum, w: Weight) -> bool:
    """True iff w pairs to 0 or 1 with every positive coroot."""
    if w.is_zero:
        raise PreconditionError("minuscule test requires a nonzero weight")
    if not w.is_dominant:
        raise PreconditionError("minuscule test requires a dominant weight")
    nz = [(j, v) for j, v in enumerate(w.coords) if v]
    for cr in d.coroots:
        p = sum(cr[j] * v for j, v in nz)
        if p not in (0, 1):
            return False
    return True


def duality_sign(d: RootDatum, w: Weight) -> int:
    """Frobenius-Schur sign of the minuscule representation with highest weight w.

    0 when the dual highest weight differs from w; otherwise (-1)**p with
    p the sum of the pairings of w against all positive coroots (the
    pairing with twice the dual Weyl vector).
    """
    if not is_minuscule(d, w):
        raise PreconditionError(
            "duality sign via coroot-sum parity is only validated on minuscule weights"
        )
    if dual_weight(d, w) != w:
        return 0
    nz = [(j, v) for j, v in enumerate(w.coords) if v]
    p = sum(sum(cr[j] * v for j, v in nz) for cr in d.coroots)
    return -1 if p % 2 else 1


def _rep_name(t: CartanType, j: int) -> str:
    fam, n = t.family, t.rank
    if fam == "A":
        return "Std" if j == 1 else f"Λ^{j} Std"
    if fam == "B":
        return "Spin"
    if fam == "C":
        return "Std"
    if fam == "D":
        if j == 1:
            return "Std"
        return "Spin+" if j == n else "Spin-"
    return f"w{j}"


def expand_rep(d: RootDatum, w: Weight, name: str | None = None) -> MinusculeRep:
    """Build the full MinusculeRep record for a minuscule dominant weight."""
    if not is_minuscule(d, w):
        raise PreconditionError(f"{w.coords} is not minuscule for {d.cartan_type}")
    orbit = weyl_orbit(d, w)
    sign = duality_sign(d, w)
    quad: dict[str, bool] = {}
    for cls in d.classes:
        rep_idx = d.length_class.index(cls)
        cr = d.coroots[rep_idx]
        quad[cls] = all(pair_with_coroot(cr, mu.coords) in (-1, 0, 1) for mu in orbit)
    if name is None:
        name = _rep_name(d.cartan_type, w.coords.index(1) + 1)
    return MinusculeRep(
        datum=d,
        highest_weight=w,
        name=name,
        dimension=len(orbit),
        sign=sign,
        orbit=orbit,
        quadratic_classes=quad,
    )


def enumerate_minuscule(t: CartanType) -> list[MinusculeRep]:
    """All minuscule fundamental weights of t, expanded, in weight-index order.

    For the classical families this reproduces the standard table:
    A_n -> w_1..w_n, B_n -> w_n, C_n -> w_1, D_n -> w_1, w_{n-1}, w_n.
    E6 and E7 contribute their (non-tabulated) minuscule weights as well;
    F4 and G2 contribute none.
    """
    d = build_root_datum(t)
    out = []
    for i in range(t.rank):
        w = Weight(tuple(1 if k == i else 0 for k in range(t.rank)))
        if is_minuscule(d, w):
            out.append(expand_rep(d, w, _rep_name(t, i + 1)))
    return out


def minuscule_rep(t: CartanType, weight_index: int) -> MinusculeRep:
    """The minuscule rep with the given 1-based fundamental-weight index."""
    if not 1 <= weight_index <= t.rank:
        raise PreconditionError(f"weight index w{weight_index} out of range for {t}")
    d = build_root_datum(t)
    w = Weight(tuple(1 if k == weight_index - 1 else 0 for k in range(t.rank)))
    if not is_minuscule(d, w):
        raise PreconditionError(f"w{weight_index} is not minuscule for {t}")
    return expand_rep(d, w)
