"""Exact root-system combinatorics for the classical and exceptional families.

All arithmetic is plain integer arithmetic in two coordinate systems:

* roots and coroots carry coordinates in the simple-root / simple-coroot
  basis,
* weights carry coordinates in the fundamental-weight basis,

so the pairing of a weight with the i-th simple coroot is simply
``w.coords[i]``.  The Cartan matrix convention is fixed once:
``A[i][j] = <alpha_j, alpha_i_coroot>``, which makes the simple root
alpha_j, written in the fundamental-weight basis, the j-th *column* of A.
Epsilon coordinates (which would need half-integers for spin weights)
are never materialized internally; they only appear in the mnemonic
parser used by the CLI to let humans name roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidCartanType, PreconditionError

CLASSICAL_FAMILIES = ("A", "B", "C", "D")
EXCEPTIONAL_FAMILIES = ("E6", "E7", "F4", "G2")
FAMILIES = CLASSICAL_FAMILIES + EXCEPTIONAL_FAMILIES

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"E6": 6, "E7": 7, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class CartanType:
    """A Dynkin family label plus rank, e.g. ("B", 4)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidCartanType(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in _FIXED_RANK:
            if self.rank != _FIXED_RANK[self.family]:
                raise InvalidCartanType(
                    f"{self.family} has fixed rank {_FIXED_RANK[self.family]}, got {self.rank}"
                )
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidCartanType(
                f"family {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL_FAMILIES

    def __str__(self) -> str:
        if self.family in _FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integer coefficient vector in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class RootDatum:
    """Cartan matrix plus the full positive system with coroots and length classes.

    ``positive_roots[k]`` is in the simple-root basis, ``coroots[k]`` is the
    corresponding coroot in the simple-coroot basis, and ``length_class[k]``
    is "long" or "short" ("long" throughout for simply-laced types).  The
    positive roots are sorted lexicographically, so every derived ordering
    is reproducible bit for bit.
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    length_class: tuple[str, ...]

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def classes(self) -> tuple[str, ...]:
        return ("long",) if "short" not in self.length_class else ("long", "short")

    def simple_root_weight_coords(self, i: int) -> tuple[int, ...]:
        """Simple root alpha_i in the fundamental-weight basis (column i of A)."""
        return tuple(row[i] for row in self.cartan_matrix)

    def root_weight_coords(self, root: tuple[int, ...]) -> tuple[int, ...]:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        n = self.rank
        return tuple(
            sum(self.cartan_matrix[i][j] * root[j] for j in range(n) if root[j])
            for i in range(n)
        )


def _cartan_matrix(t: CartanType) -> list[list[int]]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(pairs):
        for i, j in pairs:
            a[i][j] = -1
            a[j][i] = -1

    fam = t.family
    if fam in ("A", "B", "C"):
        chain((i, i + 1) for i in range(n - 1))
        if fam == "B" and n >= 2:
            a[n - 1][n - 2] = -2  # alpha_n short: <alpha_{n-1}, alpha_n_coroot> = -2
        if fam == "C" and n >= 2:
            a[n - 2][n - 1] = -2  # alpha_n long: <alpha_n, alpha_{n-1}_coroot> = -2
    elif fam == "D":
        chain((i, i + 1) for i in range(n - 2))
        chain([(n - 3, n - 1)])
    elif fam == "E6":
        chain([(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
    elif fam == "E7":
        chain([(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)])
    elif fam == "F4":
        chain([(0, 1), (1, 2), (2, 3)])
        a[2][1] = -2  # alpha_3, alpha_4 short
    elif fam == "G2":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _symmetrizer(t: CartanType) -> list[int]:
    """d_i with d_i * A[i][j] symmetric; d_i = 1 on the shortest simple roots."""
    n = t.rank
    if t.family == "B":
        return [2] * (n - 1) + [1]
    if t.family == "C":
        return [1] * (n - 1) + [2]
    if t.family == "F4":
        return [2, 2, 1, 1]
    if t.family == "G2":
        return [1, 3]
    return [1] * n


@lru_cache(maxsize=None)
def build_root_datum(t: CartanType) -> RootDatum:
    """Generate the full root datum by reflection closure from the simple roots.

    Closure runs over the whole root set (positives and negatives); the
    positives are the roots with all simple-root coordinates >= 0.  Cartan
    rows are consulted sparsely, so the closure stays fast at high rank.
    """
    a = _cartan_matrix(t)
    d = _symmetrizer(t)
    n = t.rank
    rows_sparse = [[(j, a[i][j]) for j in range(n) if a[i][j]] for i in range(n)]

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for c in frontier:
            for i in range(n):
                delta = sum(v * c[j] for j, v in rows_sparse[i])
                if delta == 0:
                    continue
                cc = list(c)
                cc[i] -= delta
                cc = tuple(cc)
                if cc not in seen:
                    seen.add(cc)
                    new.append(cc)
        frontier = new

    positives = sorted(c for c in seen if min(c) >= 0)

    def half_norm(c: tuple[int, ...]) -> int:
        tot = 0
        for i, ci in enumerate(c):
            if ci:
                tot += ci * d[i] * sum(v * c[j] for j, v in rows_sparse[i])
        if tot <= 0 or tot % 2:
            raise AssertionError(f"root norm {tot} not a positive even integer for {c}")
        return tot // 2

    halves = [half_norm(c) for c in positives]
    long_half = max(halves)
    classes = tuple("long" if h == long_half else "short" for h in halves)

    coroots = []
    for c, h in zip(positives, halves):
        cv = []
        for j, cj in enumerate(c):
            num = cj * d[j]
            if num % h:
                raise AssertionError(f"non-integral coroot coordinate for root {c}")
            cv.append(num // h)
        coroots.append(tuple(cv))

    return RootDatum(
        cartan_type=t,
        cartan_matrix=tuple(tuple(row) for row in a),
        positive_roots=tuple(positives),
        coroots=tuple(coroots),
        length_class=classes,
    )


def pairing(d: RootDatum, w: Weight, coroot_index: int) -> int:
    """Exact integer pairing of w with the coroot at the given positive-root index."""
    if not 0 <= coroot_index < len(d.coroots):
        raise PreconditionError(
            f"coroot index {coroot_index} out of range [0, {len(d.coroots)})"
        )
    cr = d.coroots[coroot_index]
    return sum(a * b for a, b in zip(cr, w.coords) if a)


def pair_with_coroot(coroot: tuple[int, ...], coords: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(coroot, coords) if a)


def simple_reflection(d: RootDatum, w: Weight, i: int) -> Weight:
    """s_i(w) = w - <w, alpha_i_coroot> alpha_i, in fundamental-weight coordinates."""
    if not 0 <= i < d.rank:
        raise PreconditionError(f"simple reflection index {i} out of range [0, {d.rank})")
    c = w.coords[i]
    if c == 0:
        return w
    col = d.simple_root_weight_coords(i)
    return Weight(tuple(w.coords[k] - c * col[k] for k in range(d.rank)))


def reflect_in_root(d: RootDatum, w: Weight, root_index: int) -> Weight:
    """Reflection of w in the positive root at root_index."""
    c = pairing(d, w, root_index)
    if c == 0:
        return w
    rw = d.root_weight_coords(d.positive_roots[root_index])
    return Weight(tuple(w.coords[k] - c * rw[k] for k in range(d.rank)))


def weyl_orbit(d: RootDatum, w: Weight) -> tuple[Weight, ...]:
    """Full Weyl-group orbit of a dominant weight, by breadth-first closure.

    Returns the orbit sorted lexicographically on coordinates, duplicate
    free; the traversal order never leaks into the result.
    """
    if not w.is_dominant:
        raise PreconditionError(
            "weyl_orbit requires a dominant weight; take the dominant representative first"
        )
    n = d.rank
    cols = [d.simple_root_weight_coords(i) for i in range(n)]
    seen = {w.coords}
    frontier = [w.coords]
    while frontier:
        new = []
        for mu in frontier:
            for i in range(n):
                ci = mu[i]
                if ci == 0:
                    continue
                col = cols[i]
                nu = tuple(mu[k] - ci * col[k] for k in range(n))
                if nu not in seen:
                    seen.add(nu)
                    new.append(nu)
        frontier = new
    return tuple(Weight(c) for c in sorted(seen))


def dual_weight(d: RootDatum, w: Weight) -> Weight:
    """Highest weight of the dual representation: the negated antidominant orbit element.

    Computed by greedy descent (reflect away the first positive coordinate),
    which reaches the unique antidominant element without enumerating the
    orbit.
    """
    if not w.is_dominant:
        raise PreconditionError("dual_weight requires a dominant weight")
    n = d.rank
    a = d.cartan_matrix
    mu = list(w.coords)
    while True:
        i = next((k for k in range(n) if mu[k] > 0), None)
        if i is None:
            break
        ci = mu[i]
        for k in range(n):
            mu[k] -= ci * a[k][i]
    return Weight(tuple(-x for x in mu))


# --- epsilon-coordinate mnemonics -------------------------------------------
#
# Root specs like "e1-e2", "e3", "2e4" are offered to humans by the CLI.
# Internally each classical simple root has a fixed epsilon expansion; a
# parsed mnemonic is matched against the epsilon vectors of the positive
# roots.  Only A/B/C/D support this (the drop machinery does not cover
# exceptional types).

_TERM_RE = re.compile(r"^(\d*)e(\d+)$")


def _epsilon_dim(t: CartanType) -> int:
    return t.rank + 1 if t.family == "A" else t.rank


def _simple_root_epsilons(t: CartanType) -> list[tuple[int, ...]]:
    if not t.is_classical:
        raise PreconditionError(f"epsilon mnemonics cover classical types only, not {t}")
    n, m = t.rank, _epsilon_dim(t)

    def vec(items: dict[int, int]) -> tuple[int, ...]:
        return tuple(items.get(k, 0) for k in range(m))

    rows = [vec({i: 1, i + 1: -1}) for i in range(n - 1)]
    if t.family == "A":
        rows.append(vec({n - 1: 1, n: -1}))
    elif t.family == "B":
        rows.append(vec({n - 1: 1}))
    elif t.family == "C":
        rows.append(vec({n - 1: 2}))
    else:
        rows.append(vec({n - 2: 1, n - 1: 1}))
    return rows


def parse_epsilon_spec(t: CartanType, spec: str) -> tuple[int, ...]:
    """Parse a mnemonic like "e1-e2" or "2e3" into an epsilon vector."""
    m = _epsilon_dim(t)
    s = spec.replace(" ", "")
    if not s:
        raise PreconditionError("empty root spec")
    out = [0] * m
    sign = 1
    for chunk in re.split(r"([+-])", s):
        if chunk == "":
            continue
        if chunk == "+":
            sign = 1
            continue
        if chunk == "-":
            sign = -1
            continue
        match = _TERM_RE.match(chunk)
        if not match:
            raise PreconditionError(f"malformed root spec term {chunk!r} in {spec!r}")
        coeff = int(match.group(1) or "1")
        idx = int(match.group(2))
        if not 1 <= idx <= m:
            raise PreconditionError(f"epsilon index e{idx} out of range 1..{m} for {t}")
        out[idx - 1] += sign * coeff
        sign = 1
    return tuple(out)


@lru_cache(maxsize=None)
def _positive_root_epsilon_index(t: CartanType) -> dict[tuple[int, ...], int]:
    d = build_root_datum(t)
    rows = _simple_root_epsilons(t)
    m = _epsilon_dim(t)
    table: dict[tuple[int, ...], int] = {}
    for idx, root in enumerate(d.positive_roots):
        eps = [0] * m
        for k, ck in enumerate(root):
            if ck:
                for j in range(m):
                    eps[j] += ck * rows[k][j]
        table[tuple(eps)] = idx
    return table


def find_positive_root(t: CartanType, spec: str) -> int:
    """Index of the positive root named by an epsilon mnemonic; raises if absent."""
    eps = parse_epsilon_spec(t, spec)
    table = _positive_root_epsilon_index(t)
    if eps not in table:
        raise PreconditionError(f"{spec!r} is not a positive root of {t}")
    return table[eps]
