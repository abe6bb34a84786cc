"""Shared independent oracles for the test suite.

Everything in this module is deliberately written from scratch (dense
Gaussian elimination, box searches, dense polynomial arithmetic) so the
library is checked against code that shares none of its algorithms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence


def solve_rational_combination(
    vectors: Sequence[Sequence[int]], target: Sequence[int]
) -> Optional[list[Fraction]]:
    """Solve sum_j c_j * vectors[j] = target over Q by Gaussian elimination."""
    r = len(vectors)
    k = len(target)
    if r == 0:
        return [] if all(x == 0 for x in target) else None
    aug = [
        [Fraction(vectors[j][i]) for j in range(r)] + [Fraction(target[i])]
        for i in range(k)
    ]
    row = 0
    pivot_cols = []
    for col in range(r):
        piv = next((i for i in range(row, k) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pivot = aug[row][col]
        aug[row] = [x / pivot for x in aug[row]]
        for i in range(k):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == k:
            break
    sol = [Fraction(0)] * r
    for idx, col in enumerate(pivot_cols):
        sol[col] = aug[idx][r]
    for i in range(k):
        if sum(sol[j] * vectors[j][i] for j in range(r)) != target[i]:
            return None
    return sol


def in_lattice(vectors: Sequence[Sequence[int]], z: Sequence[int]) -> bool:
    """Whether z is an integer combination of the given basis vectors."""
    sol = solve_rational_combination(vectors, z)
    return sol is not None and all(c.denominator == 1 for c in sol)


def brute_force_kernel_vectors(rows: Sequence[Sequence[int]], box: int) -> list[tuple[int, ...]]:
    """All integer z in [-box, box]^k with (rows) @ z = 0, by raw enumeration."""
    k = len(rows[0])
    found = []
    for z in itertools.product(range(-box, box + 1), repeat=k):
        if all(sum(r[i] * z[i] for i in range(k)) == 0 for r in rows):
            found.append(z)
    return found


def random_unimodular(dim: int, rng, steps: int = 6) -> list[list[int]]:
    """Random unimodular integer matrix built from elementary row operations."""
    mat = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        op = rng.choice(("add", "swap", "negate"))
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if op == "add" and i != j:
            q = rng.choice((-2, -1, 1, 2))
            mat[i] = [a + q * b for a, b in zip(mat[i], mat[j])]
        elif op == "swap" and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        elif op == "negate":
            mat[i] = [-a for a in mat[i]]
    return mat


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    return [[sum(a[i][t] * b[t][j] for t in range(m)) for j in range(p)] for i in range(n)]


# ---------------------------------------------------------------------------
# Dense polynomial oracles (integer exponents, list-of-coefficients form)
# ---------------------------------------------------------------------------


def dense_mul(f: Sequence, g: Sequence) -> list:
    """Convolution product of dense coefficient lists."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def dense_trim(f: Sequence) -> list:
    out = list(f)
    while out and out[-1] == 0:
        out.pop()
    return out


def dense_divide(f: Sequence, g: Sequence) -> Optional[list]:
    """Exact division of dense rational coefficient lists, None if not exact."""
    f = [Fraction(c) for c in dense_trim(f)]
    g = [Fraction(c) for c in dense_trim(g)]
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    if len(f) < len(g):
        return None
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    r = f[:]
    for i in range(len(q) - 1, -1, -1):
        coef = r[i + len(g) - 1] / g[-1]
        q[i] = coef
        if coef:
            for j, gc in enumerate(g):
                r[i + j] -= coef * gc
    return q if all(c == 0 for c in r) else None
