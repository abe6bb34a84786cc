"""Exact integer and rational linear algebra.

Every verdict computed by this package reduces to three exact primitives
implemented here:

* lowest-terms decomposition of a positive rational,
* a saturated basis of the integer kernel of an integer matrix, obtained by
  column reduction with a unimodular transform,
* feasibility of homogeneous rational inequality systems over the span of
  such a basis, decided by Fourier-Motzkin elimination and always backed by
  an explicit integer witness.

All arithmetic uses Python integers and ``fractions.Fraction``; nothing here
is approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

Rational = Union[int, str, Fraction]
IntVector = tuple[int, ...]
QVector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """A vector or functional does not have the expected length."""


def parse_rational(value: Rational) -> Fraction:
    """Parse a rational given as ``Fraction``, ``int``, or a string "p/q" / "n"."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"cannot interpret {value!r} as a rational number")


def format_rational(value: Rational) -> str:
    """Canonical string form of a rational: "p/q", or "n" for integers."""
    q = parse_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_num_den(value: Rational) -> tuple[int, int]:
    """Split a positive rational into its coprime (numerator, denominator).

    Raises ``ValueError`` for zero or negative input.
    """
    q = parse_rational(value)
    if q <= 0:
        raise ValueError(f"rational_num_den requires a positive rational, got {q}")
    return q.numerator, q.denominator


def dot(u: Sequence[Rational], v: Sequence[Rational]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    total = Fraction(0)
    for a, b in zip(u, v):
        total += parse_rational(a) * parse_rational(b)
    return total


@dataclass(frozen=True)
class IntMatrix:
    """Dense arbitrary-precision integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: IntVector

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows in matrix literal")
            flat.extend(int(x) for x in row)
        return cls(nrows, ncols, tuple(flat))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def apply(self, z: Sequence[int]) -> IntVector:
        """Matrix-vector product A z."""
        if len(z) != self.cols:
            raise DimensionMismatch(f"vector of length {len(z)} against {self.cols} columns")
        return tuple(sum(self.entry(i, j) * z[j] for j in range(self.cols)) for i in range(self.rows))


@dataclass(frozen=True)
class LatticeBasis:
    """Basis of a saturated sublattice of Z^dim.

    Saturated means the lattice equals the intersection of its rational span
    with Z^dim, so rational feasibility over the span always scales back into
    the lattice itself.
    """

    dim: int
    vectors: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        for v in self.vectors:
            if len(v) != self.dim:
                raise DimensionMismatch("basis vector of wrong length")

    @property
    def rank(self) -> int:
        return len(self.vectors)


def _sign_normalized(vector: Sequence[int]) -> IntVector:
    """Flip the sign so the first nonzero entry is positive."""
    for x in vector:
        if x != 0:
            return tuple(vector) if x > 0 else tuple(-y for y in vector)
    return tuple(vector)


def integer_kernel(matrix: IntMatrix) -> LatticeBasis:
    """Saturated basis of {z in Z^cols : matrix @ z = 0}.

    Column reduction with an accumulated unimodular transform U: column
    operations bring A into column echelon form A U = H, and the columns of U
    across the zero columns of H are a kernel basis.  Because U is unimodular
    those columns extend to a Z-basis of Z^cols, which makes the kernel basis
    saturated for free.
    """
    m, k = matrix.rows, matrix.cols
    cols = [list(matrix.column(j)) for j in range(k)]
    trans = [[1 if i == j else 0 for i in range(k)] for j in range(k)]

    def combine(j: int, j0: int, q: int) -> None:
        cj, c0 = cols[j], cols[j0]
        for i in range(m):
            cj[i] -= q * c0[i]
        tj, t0 = trans[j], trans[j0]
        for i in range(k):
            tj[i] -= q * t0[i]

    pivots = 0
    for r in range(m):
        while True:
            active = [j for j in range(pivots, k) if cols[j][r] != 0]
            if not active:
                break
            if len(active) == 1:
                j = active[0]
                cols[pivots], cols[j] = cols[j], cols[pivots]
                trans[pivots], trans[j] = trans[j], trans[pivots]
                pivots += 1
                break
            # Euclidean step: reduce every active column by the one with the
            # smallest nonzero entry in row r.
            j0 = min(active, key=lambda j: abs(cols[j][r]))
            for j in active:
                if j != j0:
                    combine(j, j0, cols[j][r] // cols[j0][r])

    kernel = tuple(_sign_normalized(trans[j]) for j in range(pivots, k))
    return LatticeBasis(k, kernel)


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination
# ---------------------------------------------------------------------------

Constraint = tuple[QVector, Fraction]  # coeffs . t >= rhs


def _constraint_key(coeffs: QVector, rhs: Fraction) -> tuple[int, ...]:
    """Primitive integer form of a constraint, for deduplication."""
    den = math.lcm(*(c.denominator for c in coeffs), rhs.denominator)
    nums = [c.numerator * (den // c.denominator) for c in coeffs]
    nums.append(rhs.numerator * (den // rhs.denominator))
    g = math.gcd(*nums)
    if g > 1:
        nums = [x // g for x in nums]
    return tuple(nums)


def solve_inequalities(constraints: Sequence[Constraint], nvars: int) -> Optional[list[Fraction]]:
    """Exact solution of the system coeffs . t >= rhs, or None if infeasible.

    Eliminates the last variable, recurses, and back-substitutes, so a
    feasible system always yields a concrete rational point.
    """
    work: list[Constraint] = []
    seen: set[tuple[int, ...]] = set()
    for coeffs, rhs in constraints:
        if len(coeffs) != nvars:
            raise DimensionMismatch("constraint arity does not match variable count")
        if all(c == 0 for c in coeffs):
            if rhs > 0:
                return None
            continue
        key = _constraint_key(coeffs, rhs)
        if key not in seen:
            seen.add(key)
            work.append((coeffs, rhs))
    if nvars == 0:
        return []

    lowers: list[tuple[QVector, Fraction, Fraction]] = []
    uppers: list[tuple[QVector, Fraction, Fraction]] = []
    projected: list[Constraint] = []
    for coeffs, rhs in work:
        a = coeffs[-1]
        head = coeffs[:-1]
        if a > 0:
            lowers.append((head, rhs, a))
        elif a < 0:
            uppers.append((head, rhs, a))
        else:
            projected.append((head, rhs))
    for hl, rl, al in lowers:
        for hu, ru, au in uppers:
            # (rl - hl.t)/al <= t_last <= (ru - hu.t)/au with al > 0 > au;
            # clearing denominators (and one sign flip) gives:
            coeffs = tuple(al * cu - au * cl for cl, cu in zip(hl, hu))
            projected.append((coeffs, al * ru - au * rl))

    sub = solve_inequalities(projected, nvars - 1)
    if sub is None:
        return None
    lo_vals = [(rl - dot(hl, sub)) / al for hl, rl, al in lowers]
    hi_vals = [(ru - dot(hu, sub)) / au for hu, ru, au in uppers]
    if lo_vals:
        value = max(lo_vals)
    elif hi_vals:
        value = min(hi_vals)
    else:
        value = Fraction(0)
    sub.append(value)
    return sub


def homogeneous_lp_witness(
    basis: LatticeBasis,
    strict: Sequence[Rational],
    nonstrict: Sequence[Sequence[Rational]] = (),
) -> Optional[IntVector]:
    """Integer lattice vector z with strict . z >= 1 and n . z <= 0 for all n.

    The search runs over the rational span of ``basis``; by homogeneity any
    rational solution scales to an integer one, and saturation of the basis
    guarantees the scaled point lies in the lattice itself.  Returns None when
    the system is infeasible.
    """
    k = basis.dim
    strict_q = tuple(parse_rational(c) for c in strict)
    if len(strict_q) != k:
        raise DimensionMismatch("strict functional has wrong length")
    nonstrict_q = []
    for n in nonstrict:
        nq = tuple(parse_rational(c) for c in n)
        if len(nq) != k:
            raise DimensionMismatch("nonstrict functional has wrong length")
        nonstrict_q.append(nq)

    r = basis.rank
    rows: list[Constraint] = [(tuple(dot(strict_q, b) for b in basis.vectors), Fraction(1))]
    for n in nonstrict_q:
        rows.append((tuple(-dot(n, b) for b in basis.vectors), Fraction(0)))
    t = solve_inequalities(rows, r)
    if t is None:
        return None

    z = [Fraction(0)] * k
    for coeff, vec in zip(t, basis.vectors):
        for i in range(k):
            z[i] += coeff * vec[i]
    scale = math.lcm(*(q.denominator for q in z)) if z else 1
    witness = tuple(int(q * scale) for q in z)
    # Positive scaling preserves every constraint (strict stays >= 1 since scale >= 1).
    assert dot(strict_q, witness) >= 1
    assert all(dot(n, witness) <= 0 for n in nonstrict_q)
    return witness


def homogeneous_lp_feasible(
    basis: LatticeBasis,
    strict: Sequence[Rational],
    nonstrict: Sequence[Sequence[Rational]] = (),
) -> bool:
    """Whether some z in the span of ``basis`` has strict.z >= 1 and n.z <= 0."""
    return homogeneous_lp_witness(basis, strict, nonstrict) is not None
