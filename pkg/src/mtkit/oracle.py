"""Brute-force exact-matrix layer: representation matrices, unipotence, tensor checks.

Everything here is deliberately independent of the weight-counting route
in mtkit.drops: matrices are built entry by entry, ranks come from
Gaussian elimination, unipotence degrees from repeated multiplication.
Arithmetic is exact throughout -- Python ints / fractions over the
rationals, machine ints mod p over a prime field.  No floats anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FieldMismatch, NotUnipotent, PreconditionError
from .minuscule import MinusculeRep
from .roots import pair_with_coroot

DEFAULT_PRIME = 10007  # large enough that desk-scale tensor degrees never degrade

SIGN_CONVENTIONS = ("plus", "alternating")


@dataclass
class ExactMatrix:
    """Dense square matrix over the rationals (prime=None) or over F_p."""

    rows: list[list]
    prime: int | None = None

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise PreconditionError("ExactMatrix must be square")
            for x in row:
                if isinstance(x, float):
                    raise PreconditionError("floating point entries are not allowed")
        if self.prime is not None:
            self.rows = [[x % self.prime for x in row] for row in self.rows]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, prime: int | None = None) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], prime)

    def copy(self) -> "ExactMatrix":
        return ExactMatrix([row[:] for row in self.rows], self.prime)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return all(
            x == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.prime != other.prime:
            raise FieldMismatch("cannot multiply matrices over different fields")
        if self.dim != other.dim:
            raise PreconditionError("dimension mismatch in matrix product")
        n = self.dim
        b = other.rows
        p = self.prime
        out = []
        for arow in self.rows:
            acc = [0] * n
            for k, a in enumerate(arow):
                if a:
                    brow = b[k]
                    acc = [x + a * y for x, y in zip(acc, brow)]
            out.append([x % p for x in acc] if p else acc)
        return ExactMatrix(out, p)

    def sub_identity(self) -> "ExactMatrix":
        """M - 1, the nilpotent part candidate."""
        n = self.dim
        rows = [row[:] for row in self.rows]
        for i in range(n):
            rows[i][i] = rows[i][i] - 1
        return ExactMatrix(rows, self.prime)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.prime != other.prime:
            raise FieldMismatch("cannot tensor matrices over different fields")
        n2 = other.dim
        p = self.prime
        rows = []
        for arow in self.rows:
            for brow in other.rows:
                row = []
                for a in arow:
                    if a:
                        row.extend((a * bb) % p if p else a * bb for bb in brow)
                    else:
                        row.extend([0] * n2)
                rows.append(row)
        return ExactMatrix(rows, p)

    def rank(self) -> int:
        """Exact rank by Gaussian elimination (fraction arithmetic over Q)."""
        n = self.dim
        rows = [row[:] for row in self.rows]
        p = self.prime
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pivot = rows[r][c]
            inv = pow(pivot, -1, p) if p else None
            prow = rows[r]
            for i in range(r + 1, n):
                v = rows[i][c]
                if v == 0:
                    continue
                if p:
                    f = v * inv % p
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
                else:
                    f = Fraction(v) / Fraction(pivot)
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
            r += 1
            if r == n:
                break
        return r


@dataclass
class UnipotenceReport:
    """Degree k with (M-1)^k = 0 != (M-1)^{k-1}, plus the drop rank(M-1)."""

    degree: int
    drop: int
    dim: int
    quadratic: bool
    prime: int | None = None

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "drop": self.drop,
            "dim": self.dim,
            "quadratic": self.quadratic,
            "prime": self.prime,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "UnipotenceReport":
        return cls(
            degree=d["degree"],
            drop=d["drop"],
            dim=d["dim"],
            quadratic=d["quadratic"],
            prime=d.get("prime"),
        )


def nilpotency_degree(nil: ExactMatrix) -> int:
    """Smallest k >= 1 with nil^k = 0; raises NotUnipotent when none exists."""
    if nil.is_zero():
        return 1
    power = nil
    k = 1
    while k < nil.dim:
        power = power @ nil
        k += 1
        if power.is_zero():
            return k
    raise NotUnipotent(f"(M - 1)^{nil.dim} != 0, so M is not unipotent")


def unipotence(m: ExactMatrix) -> UnipotenceReport:
    nil = m.sub_identity()
    degree = nilpotency_degree(nil)
    drop = nil.rank()
    return UnipotenceReport(
        degree=degree, drop=drop, dim=m.dim, quadratic=degree <= 2, prime=m.prime
    )


def tensor(m1: ExactMatrix, m2: ExactMatrix) -> ExactMatrix:
    """Kronecker product, in the standard row-major block ordering."""
    return m1.kron(m2)


def build_root_element(
    rep: MinusculeRep,
    root_indices: list[int],
    prime: int | None = None,
    signs: str = "plus",
) -> ExactMatrix:
    """Matrix of the product of root elements x_alpha(1) in the weight basis.

    Each x_alpha sends v_mu to v_mu + c v_{mu+alpha} when <mu, alpha_coroot>
    is -1, and fixes v_mu otherwise.  The cocycle sign c is +-1 under a fixed
    deterministic convention ("plus": always +1; "alternating": parity of the
    source and target orbit positions); ranks and unipotence degrees over the
    rationals do not depend on the choice, which the test suite asserts.

    Multiple roots must be pairwise orthogonal; the product is taken in the
    given order.  Single-root elements are certified quadratic; products are
    exploratory (the sign convention is not certified to define a group
    representation).
    """
    if not root_indices:
        raise PreconditionError("at least one root is required")
    if signs not in SIGN_CONVENTIONS:
        raise PreconditionError(f"unknown sign convention {signs!r}")
    d = rep.datum
    for idx in root_indices:
        if not 0 <= idx < len(d.positive_roots):
            raise PreconditionError(f"root index {idx} out of range")
    for a in root_indices:
        for b in root_indices:
            if a == b:
                continue
            wa = d.root_weight_coords(d.positive_roots[a])
            if pair_with_coroot(d.coroots[b], wa):
                raise PreconditionError(
                    f"roots {d.positive_roots[a]} and {d.positive_roots[b]} are not orthogonal"
                )

    order = {mu.coords: i for i, mu in enumerate(rep.orbit)}
    n = rep.dimension
    product: ExactMatrix | None = None
    for idx in root_indices:
        cr = d.coroots[idx]
        alpha_w = d.root_weight_coords(d.positive_roots[idx])
        m = ExactMatrix.identity(n, prime)
        for mu in rep.orbit:
            if pair_with_coroot(cr, mu.coords) != -1:
                continue
            target = tuple(x + y for x, y in zip(mu.coords, alpha_w))
            if target not in order:
                raise AssertionError(
                    f"weight {target} fell outside the orbit; minuscule bookkeeping broken"
                )
            src, dst = order[mu.coords], order[target]
            c = 1 if signs == "plus" else (-1 if (src + dst) % 2 else 1)
            m.rows[dst][src] = c % prime if prime else c
        product = m if product is None else product @ m
    return product


# --- randomized tensor-lemma verification ------------------------------------


@dataclass
class TensorLemmaReport:
    """Outcome of seeded random trials of degree additivity for tensor products.

    For k1-unipotent g1 and k2-unipotent g2, the tensor g1 (x) g2 must be
    exactly (k1 + k2 - 1)-unipotent over the rationals; over F_p with small p
    the degree can drop, which is recorded in char_deviations rather than
    counted as a failure.  corollary_violations records any quadratic tensor
    whose factors are both different from the identity (there must be none).
    """

    k1: int
    k2: int
    dims: tuple[int, int]
    trials: int
    seed: int
    prime: int | None
    expected_degree: int
    degree_counts: dict[int, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    char_deviations: list[dict] = field(default_factory=list)
    corollary_violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.corollary_violations

    def to_dict(self) -> dict:
        return {
            "k1": self.k1,
            "k2": self.k2,
            "dims": list(self.dims),
            "trials": self.trials,
            "seed": self.seed,
            "prime": self.prime,
            "expected_degree": self.expected_degree,
            "degree_counts": {str(k): v for k, v in sorted(self.degree_counts.items())},
            "failures": self.failures,
            "char_deviations": self.char_deviations,
            "corollary_violations": self.corollary_violations,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TensorLemmaReport":
        return cls(
            k1=d["k1"],
            k2=d["k2"],
            dims=tuple(d["dims"]),
            trials=d["trials"],
            seed=d["seed"],
            prime=d.get("prime"),
            expected_degree=d["expected_degree"],
            degree_counts={int(k): v for k, v in d["degree_counts"].items()},
            failures=d["failures"],
            char_deviations=d["char_deviations"],
            corollary_violations=d["corollary_violations"],
        )


def _unit_lower_inverse(l_rows: list[list[int]]) -> list[list[int]]:
    # forward substitution; unit triangular integer matrices invert over Z
    n = len(l_rows)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        for i in range(c + 1, n):
            s = sum(l_rows[i][j] * inv[j][c] for j in range(c, i) if l_rows[i][j])
            inv[i][c] = -s
    return inv


def _transpose(rows: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


def random_unipotent(dim: int, k: int, rng: random.Random, prime: int | None = None) -> ExactMatrix:
    """Random k-unipotent dim x dim matrix: a conjugated Jordan-shaped seed.

    Jordan blocks form a random partition of dim with largest part exactly k;
    the conjugator is a product of random unit-triangular integer matrices,
    so the result is integral and stays invertible mod every prime.
    """
    if k < 1:
        raise PreconditionError("unipotence degree must be >= 1")
    if dim < k:
        raise PreconditionError(f"dimension {dim} cannot host a {k}-unipotent element")
    parts = [k]
    rem = dim - k
    while rem:
        p = rng.randint(1, min(k, rem))
        parts.append(p)
        rem -= p

    jordan = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    pos = 0
    for part in parts:
        for i in range(part - 1):
            jordan[pos + i][pos + i + 1] = 1
        pos += part

    lo = [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(dim)] for i in range(dim)]
    up = _transpose(
        [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(dim)] for i in range(dim)]
    )
    lo_inv = _unit_lower_inverse(lo)
    up_inv = _transpose(_unit_lower_inverse(_transpose(up)))

    conj = ExactMatrix(lo, None) @ ExactMatrix(up, None)
    conj_inv = ExactMatrix(up_inv, None) @ ExactMatrix(lo_inv, None)
    m = conj @ ExactMatrix(jordan, None) @ conj_inv
    if prime is not None:
        return ExactMatrix(m.rows, prime)
    return m


def verify_tensor_lemma(
    k1: int,
    k2: int,
    dims: tuple[int, int],
    trials: int,
    seed: int,
    prime: int | None = None,
) -> TensorLemmaReport:
    """Seeded random verification that tensoring adds unipotence degrees minus one.

    Over the rationals every trial must give degree exactly k1 + k2 - 1 and
    no quadratic tensor may have two non-identity factors; any miss lands in
    failures / corollary_violations.  Over F_p mismatches are recorded as
    characteristic deviations instead of failures (small p genuinely lowers
    degrees; p >= k1 + k2 - 1 avoids that).
    """
    if k1 < 1 or k2 < 1:
        raise PreconditionError("unipotence degrees must be >= 1")
    if trials <= 0:
        raise PreconditionError("trials must be positive")
    d1, d2 = dims
    if d1 < k1 or d2 < k2:
        raise PreconditionError(f"dims {dims} too small for degrees ({k1}, {k2})")

    expected = k1 + k2 - 1
    report = TensorLemmaReport(
        k1=k1, k2=k2, dims=(d1, d2), trials=trials, seed=seed, prime=prime,
        expected_degree=expected,
    )
    base = random.Random(seed)
    trial_seeds = [base.randrange(2**63) for _ in range(trials)]
    for t, ts in enumerate(trial_seeds):
        rng = random.Random(ts)
        m1 = random_unipotent(d1, k1, rng, prime)
        m2 = random_unipotent(d2, k2, rng, prime)
        deg = nilpotency_degree(tensor(m1, m2).sub_identity())
        report.degree_counts[deg] = report.degree_counts.get(deg, 0) + 1
        if deg != expected:
            record = {"trial": t, "degree": deg, "expected": expected}
            if prime is None:
                report.failures.append(record)
            else:
                report.char_deviations.append(record)
        if deg <= 2 and not m1.is_identity() and not m2.is_identity():
            report.corollary_violations.append({"trial": t, "degree": deg})
    return report
