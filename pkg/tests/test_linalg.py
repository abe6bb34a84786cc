"""Exact linear algebra: kernels, saturation, and homogeneous feasibility."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from factolab.linalg import (
    DimensionMismatch,
    IntMatrix,
    LatticeBasis,
    dot,
    format_rational,
    homogeneous_lp_feasible,
    homogeneous_lp_witness,
    integer_kernel,
    parse_rational,
    rational_num_den,
    solve_inequalities,
)
from helpers import (
    brute_force_kernel_vectors,
    in_lattice,
    mat_mul,
    random_unimodular,
)


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------


def test_rational_num_den_lowest_terms():
    assert rational_num_den(Fraction(4, 6)) == (2, 3)
    assert rational_num_den("4/6") == (2, 3)
    assert rational_num_den(7) == (7, 1)


def test_rational_num_den_rejects_nonpositive():
    with pytest.raises(ValueError):
        rational_num_den(0)
    with pytest.raises(ValueError):
        rational_num_den(Fraction(-2, 3))


def test_rational_round_trip():
    for text in ["2/3", "-7/5", "4", "0", "-3"]:
        assert format_rational(parse_rational(text)) == text


# ---------------------------------------------------------------------------
# integer kernels
# ---------------------------------------------------------------------------


def unit_vector(k, i):
    return tuple(1 if j == i else 0 for j in range(k))


def test_kernel_of_2_3_is_exactly_3_minus_2():
    basis = integer_kernel(IntMatrix.from_rows([[2, 3]]))
    assert basis.rank == 1
    assert basis.vectors == ((3, -2),)


def test_kernel_of_3_4_5_has_rank_two():
    mat = IntMatrix.from_rows([[3, 4, 5]])
    basis = integer_kernel(mat)
    assert basis.rank == 2
    for v in basis.vectors:
        assert mat.apply(v) == (0,)
    # brute force in a box: every kernel vector is an integer combination
    for z in brute_force_kernel_vectors([[3, 4, 5]], 8):
        assert in_lattice(basis.vectors, z)


def test_kernel_of_identity_is_trivial():
    basis = integer_kernel(IntMatrix.from_rows([[1, 0], [0, 1]]))
    assert basis.rank == 0
    assert basis.vectors == ()


def test_kernel_of_zero_matrix_is_everything():
    basis = integer_kernel(IntMatrix.from_rows([[0, 0, 0]]))
    assert basis.rank == 3
    for i in range(3):
        assert in_lattice(basis.vectors, unit_vector(3, i))


def test_kernel_saturation_on_random_matrices():
    rng = random.Random(20403)
    for _ in range(100):
        rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)]
        mat = IntMatrix.from_rows(rows)
        basis = integer_kernel(mat)
        for v in basis.vectors:
            assert mat.apply(v) == (0, 0)
        for z in brute_force_kernel_vectors(rows, 8):
            assert in_lattice(basis.vectors, z)


def test_kernel_unimodular_invariance():
    rng = random.Random(977)
    for _ in range(40):
        rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)]
        u = random_unimodular(3, rng)
        basis_a = integer_kernel(IntMatrix.from_rows(rows))
        basis_b = integer_kernel(IntMatrix.from_rows(mat_mul(u, rows)))
        assert basis_a.rank == basis_b.rank
        for v in basis_a.vectors:
            assert in_lattice(basis_b.vectors, v)
        for v in basis_b.vectors:
            assert in_lattice(basis_a.vectors, v)


# ---------------------------------------------------------------------------
# homogeneous feasibility
# ---------------------------------------------------------------------------


def test_lp_documented_rank_one_cases():
    basis = LatticeBasis(2, ((3, -2),))
    # first coordinate >= 1 while the coordinate sum stays <= 0: impossible
    assert homogeneous_lp_feasible(basis, (1, 0), [(1, 1)]) is False
    # second coordinate >= 1 with no side conditions: take t negative
    assert homogeneous_lp_feasible(basis, (0, 1), []) is True


def test_lp_empty_basis_is_infeasible():
    basis = LatticeBasis(2, ())
    assert homogeneous_lp_feasible(basis, (1, 0), []) is False


def test_lp_witness_is_integral_and_satisfies_constraints():
    basis = LatticeBasis(2, ((3, -2),))
    z = homogeneous_lp_witness(basis, (0, 1), [(1, 1)])
    assert z is not None
    assert all(isinstance(c, int) for c in z)
    assert dot((0, 1), z) >= 1
    assert dot((1, 1), z) <= 0
    assert in_lattice(basis.vectors, z)


def rank_one_oracle(vector, strict, nonstrict):
    """Feasibility of a one-parameter system by direct interval reasoning."""
    lo, hi = None, None  # bounds on t, candidate z = t * vector
    constraints = [(dot(strict, vector), Fraction(1))]
    constraints += [(-dot(n, vector), Fraction(0)) for n in nonstrict]
    for coef, bound in constraints:  # coef * t >= bound
        if coef > 0:
            val = bound / coef
            lo = val if lo is None else max(lo, val)
        elif coef < 0:
            val = bound / coef
            hi = val if hi is None else min(hi, val)
        elif bound > 0:
            return False
    if lo is not None and hi is not None and lo > hi:
        return False
    return True


def test_lp_agrees_with_rank_one_oracle():
    rng = random.Random(4242)
    for _ in range(200):
        k = rng.randint(2, 4)
        vector = tuple(rng.randint(-5, 5) for _ in range(k))
        if all(c == 0 for c in vector):
            continue
        basis = LatticeBasis(k, (vector,))
        strict = tuple(rng.randint(-3, 3) for _ in range(k))
        nonstrict = [tuple(rng.randint(-3, 3) for _ in range(k)) for _ in range(rng.randint(0, 2))]
        expected = rank_one_oracle(vector, strict, nonstrict)
        assert homogeneous_lp_feasible(basis, strict, nonstrict) is expected


def test_lp_verdicts_match_box_search_on_random_lattices():
    rng = random.Random(515)
    for _ in range(60):
        rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(2)]
        basis = integer_kernel(IntMatrix.from_rows(rows))
        strict = tuple(rng.randint(-3, 3) for _ in range(4))
        nonstrict = [tuple(rng.randint(-3, 3) for _ in range(4))]
        witness = homogeneous_lp_witness(basis, strict, nonstrict)
        if witness is not None:
            assert dot(strict, witness) >= 1
            assert dot(nonstrict[0], witness) <= 0
            assert in_lattice(basis.vectors, witness)
        else:
            # no lattice point in a small box satisfies the system either
            for coeffs in itertools.product(range(-5, 6), repeat=basis.rank):
                z = [0, 0, 0, 0]
                for c, v in zip(coeffs, basis.vectors):
                    for i in range(4):
                        z[i] += c * v[i]
                assert not (dot(strict, z) >= 1 and dot(nonstrict[0], z) <= 0)


def test_lp_unimodular_invariance_of_feasibility():
    # replacing the basis by another basis of the same lattice keeps verdicts
    rng = random.Random(8080)
    for _ in range(40):
        rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(2)]
        basis = integer_kernel(IntMatrix.from_rows(rows))
        if basis.rank < 2:
            continue
        u = random_unimodular(basis.rank, rng)
        mixed = tuple(
            tuple(sum(u[i][j] * basis.vectors[j][t] for j in range(basis.rank)) for t in range(4))
            for i in range(basis.rank)
        )
        other = LatticeBasis(4, mixed)
        strict = tuple(rng.randint(-3, 3) for _ in range(4))
        nonstrict = [tuple(rng.randint(-3, 3) for _ in range(4))]
        assert homogeneous_lp_feasible(basis, strict, nonstrict) == homogeneous_lp_feasible(
            other, strict, nonstrict
        )


def test_lp_dimension_mismatch():
    basis = LatticeBasis(2, ((3, -2),))
    with pytest.raises(DimensionMismatch):
        homogeneous_lp_feasible(basis, (1, 0, 0), [])


def test_solve_inequalities_back_substitution():
    # x >= 1, y >= 1, x + y <= 3 has a solution; x + y <= 1 does not
    sol = solve_inequalities(
        [((Fraction(1), Fraction(0)), Fraction(1)),
         ((Fraction(0), Fraction(1)), Fraction(1)),
         ((Fraction(-1), Fraction(-1)), Fraction(-3))],
        2,
    )
    assert sol is not None
    x, y = sol
    assert x >= 1 and y >= 1 and x + y <= 3
    assert (
        solve_inequalities(
            [((Fraction(1), Fraction(0)), Fraction(1)),
             ((Fraction(0), Fraction(1)), Fraction(1)),
             ((Fraction(-1), Fraction(-1)), Fraction(-1))],
            2,
        )
        is None
    )
