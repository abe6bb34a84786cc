"""Finitely generated pointed monoids presented by rational generator vectors.

A presentation is a list of k nonzero vectors in Q^d, read as the additive
submonoid they generate.  Validation checks pointedness (no nonzero
nonnegative integer relation among the generators) and produces a positive
grading, which bounds every factorization search.  Factorizations of an
element are exponent vectors over the generators and are enumerated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import (
    DimensionMismatch,
    IntMatrix,
    LatticeBasis,
    dot,
    format_rational,
    homogeneous_lp_witness,
    integer_kernel,
    parse_rational,
    solve_inequalities,
)

QVector = tuple[Fraction, ...]
FactorizationVector = tuple[int, ...]


class InvalidGenerator(ValueError):
    """A generator is the zero vector or has the wrong dimension."""


class NotPointed(ValueError):
    """The monoid has a unit besides zero; carries a nonnegative kernel witness."""

    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(
            f"presentation is not pointed: nonzero nonnegative kernel vector {witness}"
        )


class NotAnAtom(ValueError):
    """A generator factors into others; carries the index and a witness."""

    def __init__(self, index: int, witness: FactorizationVector):
        self.index = index
        self.witness = witness
        super().__init__(
            f"generator {index} is not an atom: it factors as {witness}"
        )


class DuplicateGenerator(ValueError):
    def __init__(self, index: int, original: int):
        self.index = index
        self.original = original
        super().__init__(f"generator {index} duplicates generator {original}")


class NotNormalized(ValueError):
    """The operation requires a duplicate-free, atoms-only presentation."""


def as_element(values: Iterable) -> QVector:
    """Coerce a sequence of rationals into an element vector."""
    return tuple(parse_rational(v) for v in values)


@dataclass(frozen=True)
class Grading:
    """Positive rational grading h; every generator satisfies h(g) >= 1."""

    weights: QVector

    def grade(self, vector: Sequence) -> Fraction:
        return dot(self.weights, as_element(vector))


@dataclass(frozen=True)
class MonoidPresentation:
    """k generator vectors in Q^d, understood additively."""

    ambient_dim: int
    generators: tuple[QVector, ...]
    label: Optional[str] = None

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        if not self.generators:
            raise InvalidGenerator("a presentation needs at least one generator")
        for g in self.generators:
            if len(g) != self.ambient_dim:
                raise InvalidGenerator(
                    f"generator {g} does not live in Q^{self.ambient_dim}"
                )

    @classmethod
    def from_generators(cls, generators: Sequence[Iterable], label: Optional[str] = None) -> "MonoidPresentation":
        gens = tuple(as_element(g) for g in generators)
        if not gens:
            raise InvalidGenerator("a presentation needs at least one generator")
        return cls(len(gens[0]), gens, label)

    @classmethod
    def from_values(cls, values: Sequence, label: Optional[str] = None) -> "MonoidPresentation":
        """Convenience constructor for submonoids of Q: one rational per generator."""
        return cls.from_generators([[v] for v in values], label)

    @property
    def atom_count(self) -> int:
        return len(self.generators)

    def integer_matrix(self) -> IntMatrix:
        """Generators as columns, with each coordinate row scaled integral.

        Scaling a coordinate by a positive integer does not change which
        exponent vectors annihilate the generators, so the kernel lattice of
        this matrix is exactly the relation lattice of the presentation.
        """
        rows = []
        for i in range(self.ambient_dim):
            den = math.lcm(*(g[i].denominator for g in self.generators))
            rows.append([int(g[i] * den) for g in self.generators])
        return IntMatrix.from_rows(rows)

    def kernel(self) -> LatticeBasis:
        return integer_kernel(self.integer_matrix())

    def evaluate(self, exponents: Sequence[int]) -> QVector:
        """The element sum_i exponents[i] * generator[i]."""
        if len(exponents) != self.atom_count:
            raise DimensionMismatch("exponent vector length does not match generator count")
        out = [Fraction(0)] * self.ambient_dim
        for m, g in zip(exponents, self.generators):
            if m:
                for i in range(self.ambient_dim):
                    out[i] += m * g[i]
        return tuple(out)

    def to_json_dict(self) -> dict:
        data = {
            "dim": self.ambient_dim,
            "generators": [[format_rational(c) for c in g] for g in self.generators],
        }
        if self.label is not None:
            data["label"] = self.label
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonoidPresentation":
        if not isinstance(data, dict) or "dim" not in data or "generators" not in data:
            raise ValueError("presentation JSON needs 'dim' and 'generators' fields")
        dim = int(data["dim"])
        gens = tuple(as_element(g) for g in data["generators"])
        for g in gens:
            if len(g) != dim:
                raise InvalidGenerator(f"generator {g} does not match dim {dim}")
        label = data.get("label")
        return cls(dim, gens, label)


# ---------------------------------------------------------------------------
# validation and grading
# ---------------------------------------------------------------------------


def validate_presentation(presentation: MonoidPresentation) -> Grading:
    """Check pointedness and return a positive grading, min-normalized to 1.

    A presentation is pointed exactly when no nonzero nonnegative integer
    vector annihilates the generators; by duality this is equivalent to the
    existence of a rational functional h with h(g) > 0 for every generator.
    On failure the dual certificate is produced as a NotPointed witness.
    """
    for i, g in enumerate(presentation.generators):
        if all(c == 0 for c in g):
            raise InvalidGenerator(f"generator {i} is the zero vector")

    d = presentation.ambient_dim
    ones = tuple(Fraction(1) for _ in range(d))
    weights: Optional[QVector] = None
    if all(dot(ones, g) > 0 for g in presentation.generators):
        weights = ones
    else:
        constraints = [(g, Fraction(1)) for g in presentation.generators]
        solution = solve_inequalities(constraints, d)
        if solution is not None:
            weights = tuple(solution)

    if weights is not None:
        low = min(dot(weights, g) for g in presentation.generators)
        return Grading(tuple(w / low for w in weights))

    # No positive grading exists, so a nonnegative kernel vector must.
    basis = presentation.kernel()
    k = presentation.atom_count
    nonneg = [tuple(-1 if j == i else 0 for j in range(k)) for i in range(k)]
    for i in range(k):
        strict = tuple(1 if j == i else 0 for j in range(k))
        witness = homogeneous_lp_witness(basis, strict, nonneg)
        if witness is not None:
            raise NotPointed(witness)
    raise AssertionError("no grading found and no nonnegative kernel witness either")


# ---------------------------------------------------------------------------
# factorization enumeration
# ---------------------------------------------------------------------------


def enumerate_factorizations(
    presentation: MonoidPresentation,
    element: Iterable,
    grading: Optional[Grading] = None,
) -> tuple[FactorizationVector, ...]:
    """All exponent vectors z with sum_i z_i g_i = element, sorted lexicographically.

    The positive grading caps every exponent: z_i <= h(x) / h(g_i).  The empty
    tuple means the element is not in the monoid.  Generators need not be
    atoms; the result is then a multiset of generator decompositions rather
    than factorizations into atoms.
    """
    x = as_element(element)
    if len(x) != presentation.ambient_dim:
        raise DimensionMismatch("element does not live in the ambient space")
    h = grading or validate_presentation(presentation)
    gens = presentation.generators
    k = len(gens)
    grades = [h.grade(g) for g in gens]
    budget = h.grade(x)
    results: list[FactorizationVector] = []
    if budget < 0:
        return ()

    remaining = list(x)
    acc = [0] * k

    def descend(idx: int, budget: Fraction) -> None:
        if idx == k:
            if all(c == 0 for c in remaining):
                results.append(tuple(acc))
            return
        g = gens[idx]
        cap = int(budget / grades[idx])
        # take the largest multiplicity first, then give back one copy at a time
        for i in range(presentation.ambient_dim):
            remaining[i] -= cap * g[i]
        for m in range(cap, -1, -1):
            acc[idx] = m
            descend(idx + 1, budget - m * grades[idx])
            for i in range(presentation.ambient_dim):
                remaining[i] += g[i]
        for i in range(presentation.ambient_dim):
            remaining[i] -= g[i]
        acc[idx] = 0

    descend(0, budget)
    return tuple(sorted(results))


def length_set(
    presentation: MonoidPresentation,
    element: Iterable,
    grading: Optional[Grading] = None,
) -> set[int]:
    """The set of factorization lengths of the element."""
    return {sum(z) for z in enumerate_factorizations(presentation, element, grading)}


def atomic_divisors(
    presentation: MonoidPresentation,
    element: Iterable,
    grading: Optional[Grading] = None,
) -> set[int]:
    """Indices of generators appearing in at least one factorization."""
    divisors: set[int] = set()
    for z in enumerate_factorizations(presentation, element, grading):
        divisors.update(i for i, m in enumerate(z) if m > 0)
    return divisors


# ---------------------------------------------------------------------------
# atom normalization
# ---------------------------------------------------------------------------


def _atom_defect(
    presentation: MonoidPresentation, index: int, grading: Grading
) -> Optional[FactorizationVector]:
    """A length >= 2 decomposition of generator ``index``, or None if atomic."""
    for z in enumerate_factorizations(presentation, presentation.generators[index], grading):
        if sum(z) >= 2:
            return z
    return None


def normalize_atoms(presentation: MonoidPresentation, mode: str = "auto-reduce") -> MonoidPresentation:
    """Reduce the generator list to the atoms of the monoid.

    ``auto-reduce`` drops duplicates and reducible generators (the monoid is
    unchanged); ``reject`` raises DuplicateGenerator or NotAnAtom instead.
    Atomicity of each generator is decided against the full monoid, so the
    result is independent of the order in which defects are discovered.
    """
    if mode not in ("auto-reduce", "reject"):
        raise ValueError(f"unknown normalization mode {mode!r}")
    h = validate_presentation(presentation)
    drop: set[int] = set()
    seen: dict[QVector, int] = {}
    for i, g in enumerate(presentation.generators):
        if g in seen:
            if mode == "reject":
                raise DuplicateGenerator(i, seen[g])
            drop.add(i)
        else:
            seen[g] = i
    for i in range(presentation.atom_count):
        if i in drop:
            continue
        witness = _atom_defect(presentation, i, h)
        if witness is not None:
            if mode == "reject":
                raise NotAnAtom(i, witness)
            drop.add(i)
    if not drop:
        return presentation
    survivors = tuple(
        g for i, g in enumerate(presentation.generators) if i not in drop
    )
    return MonoidPresentation(presentation.ambient_dim, survivors, presentation.label)


def ensure_normalized(
    presentation: MonoidPresentation, grading: Optional[Grading] = None
) -> Grading:
    """Validate and demand that the presentation lists exactly the atoms."""
    h = grading or validate_presentation(presentation)
    seen: dict[QVector, int] = {}
    for i, g in enumerate(presentation.generators):
        if g in seen:
            raise NotNormalized(
                f"generator {i} duplicates generator {seen[g]}; normalize first"
            )
        seen[g] = i
    for i in range(presentation.atom_count):
        witness = _atom_defect(presentation, i, h)
        if witness is not None:
            raise NotNormalized(
                f"generator {i} is not an atom (witness {witness}); normalize first"
            )
    return h
