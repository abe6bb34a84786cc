"""Factorization-theoretic classification of pointed monoid presentations.

Every question answered here reduces to the relation lattice
L = {z in Z^k : sum_i z_i g_i = 0}: pairs of factorizations of a common
element correspond to lattice vectors via z1 - z2, and irredundant relations
are exactly the sign splits (w+, w-) of nonzero w in L.  Writing sigma for
the coordinate sum (the length difference across a relation):

* unique factorization  <=>  L = 0,
* length factoriality   <=>  L = 0, or rank L = 1 with sigma(b) != 0,
* half factoriality     <=>  sigma vanishes on L,
* atom i is prime       <=>  coordinate i vanishes on L,
* atom i is purely long <=>  it is not prime and no vector in the rational
  span of L has z_i >= 1 together with sigma(z) <= 0 (purely short is the
  mirror image with sigma(z) >= 0).

The lattice basis is saturated, so rational feasibility scales back to
lattice points and the two directions match exactly.  Verdicts are decided by
these exact criteria only; bounded searches appear solely in the independent
oracle ``relation_evidence``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from .linalg import LatticeBasis, homogeneous_lp_witness
from .monoid import (
    FactorizationVector,
    Grading,
    MonoidPresentation,
    ensure_normalized,
)

FINITENESS_NOTE = (
    "finite factorization and bounded factorization hold automatically for "
    "finitely generated pointed monoids; reported as constants, not computed"
)


class AtomLabel(Enum):
    PRIME = "prime"
    PURELY_LONG = "purely_long"
    PURELY_SHORT = "purely_short"
    NEITHER = "neither"


@dataclass(frozen=True)
class FactorizationRelation:
    """A pair of factorizations of one element, long side first."""

    left: FactorizationVector
    right: FactorizationVector

    @property
    def is_irredundant(self) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.left, self.right))

    @property
    def is_balanced(self) -> bool:
        return sum(self.left) == sum(self.right)

    @classmethod
    def from_kernel_vector(cls, w: tuple[int, ...]) -> "FactorizationRelation":
        plus = tuple(max(c, 0) for c in w)
        minus = tuple(max(-c, 0) for c in w)
        return cls(plus, minus)

    def to_json_dict(self) -> dict:
        return {"left": list(self.left), "right": list(self.right)}


@dataclass(frozen=True)
class ClassificationReport:
    kernel_rank: int
    kernel_basis: tuple[tuple[int, ...], ...]
    is_ufm: bool
    is_lfm: bool
    is_hfm: bool
    is_plsm: bool
    is_ffm: bool
    is_bfm: bool
    labels: tuple[AtomLabel, ...]
    prime: tuple[int, ...]
    purely_long: tuple[int, ...]
    purely_short: tuple[int, ...]
    master: Optional[FactorizationRelation]
    witnesses: dict[str, tuple[int, ...]]
    note: str = FINITENESS_NOTE

    def to_json_dict(self) -> dict:
        return {
            "kernel_rank": self.kernel_rank,
            "kernel_basis": [list(v) for v in self.kernel_basis],
            "is_ufm": self.is_ufm,
            "is_lfm": self.is_lfm,
            "is_hfm": self.is_hfm,
            "is_plsm": self.is_plsm,
            "is_ffm": self.is_ffm,
            "is_bfm": self.is_bfm,
            "labels": [label.value for label in self.labels],
            "prime": list(self.prime),
            "purely_long": list(self.purely_long),
            "purely_short": list(self.purely_short),
            "master": self.master.to_json_dict() if self.master else None,
            "witnesses": {key: list(v) for key, v in sorted(self.witnesses.items())},
            "note": self.note,
        }


def _primitive(vector: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for c in vector:
        g = gcd(g, abs(c))
    if g > 1:
        vector = tuple(c // g for c in vector)
    return vector


def _orient(vector: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive vector with sigma > 0, or first nonzero entry > 0 if balanced."""
    v = _primitive(vector)
    s = sum(v)
    if s < 0:
        return tuple(-c for c in v)
    if s > 0:
        return v
    for c in v:
        if c != 0:
            return v if c > 0 else tuple(-c2 for c2 in v)
    return v


def _balanced_kernel_vector(basis: LatticeBasis) -> Optional[tuple[int, ...]]:
    """A nonzero lattice vector with coordinate sum zero, if one exists."""
    sigmas = [sum(v) for v in basis.vectors]
    for v, s in zip(basis.vectors, sigmas):
        if s == 0:
            return _orient(v)
    if basis.rank >= 2:
        b1, b2 = basis.vectors[0], basis.vectors[1]
        s1, s2 = sigmas[0], sigmas[1]
        mixed = tuple(s2 * a - s1 * b for a, b in zip(b1, b2))
        return _orient(mixed)
    return None


def _master_from_basis(basis: LatticeBasis) -> Optional[FactorizationRelation]:
    if basis.rank != 1:
        return None
    b = basis.vectors[0]
    if sum(b) == 0:
        return None
    return FactorizationRelation.from_kernel_vector(_orient(b))


def classify(
    presentation: MonoidPresentation, grading: Optional[Grading] = None
) -> ClassificationReport:
    """Full exact classification of a validated, atoms-only presentation."""
    ensure_normalized(presentation, grading)

    basis = presentation.kernel()
    k = presentation.atom_count
    rank = basis.rank
    sigmas = [sum(v) for v in basis.vectors]

    is_ufm = rank == 0
    is_hfm = all(s == 0 for s in sigmas)
    is_lfm = rank == 0 or (rank == 1 and sigmas[0] != 0)

    sigma = tuple(Fraction(1) for _ in range(k))
    neg_sigma = tuple(Fraction(-1) for _ in range(k))
    labels: list[AtomLabel] = []
    witnesses: dict[str, tuple[int, ...]] = {}
    for i in range(k):
        if all(v[i] == 0 for v in basis.vectors):
            labels.append(AtomLabel.PRIME)
            continue
        unit = tuple(Fraction(1 if j == i else 0) for j in range(k))
        long_refutation = homogeneous_lp_witness(basis, unit, [sigma])
        short_refutation = homogeneous_lp_witness(basis, unit, [neg_sigma])
        if long_refutation is not None:
            witnesses[f"atom{i}_not_purely_long"] = long_refutation
        if short_refutation is not None:
            witnesses[f"atom{i}_not_purely_short"] = short_refutation
        if long_refutation is None and short_refutation is None:
            raise AssertionError(
                f"atom {i} occurs in the kernel but refutes both purity systems"
            )
        if long_refutation is None:
            labels.append(AtomLabel.PURELY_LONG)
        elif short_refutation is None:
            labels.append(AtomLabel.PURELY_SHORT)
        else:
            labels.append(AtomLabel.NEITHER)

    prime = tuple(i for i, lab in enumerate(labels) if lab is AtomLabel.PRIME)
    purely_long = tuple(i for i, lab in enumerate(labels) if lab is AtomLabel.PURELY_LONG)
    purely_short = tuple(i for i, lab in enumerate(labels) if lab is AtomLabel.PURELY_SHORT)

    if rank > 0:
        witnesses["not_ufm"] = _orient(basis.vectors[0])
    if not is_hfm:
        for v, s in zip(basis.vectors, sigmas):
            if s != 0:
                witnesses["not_hfm"] = _orient(v)
                break
    if not is_lfm:
        balanced = _balanced_kernel_vector(basis)
        assert balanced is not None, "not length factorial but no balanced relation"
        witnesses["not_lfm"] = balanced

    return ClassificationReport(
        kernel_rank=rank,
        kernel_basis=basis.vectors,
        is_ufm=is_ufm,
        is_lfm=is_lfm,
        is_hfm=is_hfm,
        is_plsm=bool(purely_long) and bool(purely_short),
        is_ffm=True,
        is_bfm=True,
        labels=tuple(labels),
        prime=prime,
        purely_long=purely_long,
        purely_short=purely_short,
        master=_master_from_basis(basis),
        witnesses=witnesses,
    )


def prime_atoms(presentation: MonoidPresentation) -> tuple[int, ...]:
    """Indices of atoms whose multiplicity is constant across every fiber."""
    return classify(presentation).prime


def pure_atom_labels(presentation: MonoidPresentation) -> tuple[AtomLabel, ...]:
    return classify(presentation).labels


def master_relation(presentation: MonoidPresentation) -> Optional[FactorizationRelation]:
    """The primitive unbalanced relation generating all relations, if any.

    Exists exactly when the presentation is length factorial but not unique:
    the kernel is then spanned by one vector b with sigma(b) != 0, oriented
    long side first, and every irredundant unbalanced relation is a multiple
    of the returned one (or its swap).
    """
    return classify(presentation).master


def relation_evidence(
    presentation: MonoidPresentation,
    bound,
    grading: Optional[Grading] = None,
) -> list[FactorizationRelation]:
    """All irredundant relations of grade <= bound, by raw element grouping.

    This is the package's bounded brute-force oracle: it never touches the
    kernel lattice.  Exponent vectors within the grade budget are grouped by
    the element they evaluate to, and every support-disjoint pair in a group
    is reported (long or lexicographically larger side first).  Relations are
    sorted by grade, then element, then left side.
    """
    h = ensure_normalized(presentation, grading)
    bound = Fraction(bound)
    gens = presentation.generators
    k = len(gens)
    d = presentation.ambient_dim
    grades = [h.grade(g) for g in gens]

    groups: dict[tuple[Fraction, ...], list[FactorizationVector]] = {}
    acc = [0] * k
    value = [Fraction(0)] * d

    def walk(idx: int, budget: Fraction) -> None:
        if idx == k:
            groups.setdefault(tuple(value), []).append(tuple(acc))
            return
        g = gens[idx]
        cap = int(budget / grades[idx])
        for m in range(cap + 1):
            acc[idx] = m
            walk(idx + 1, budget - m * grades[idx])
            for i in range(d):
                value[i] += g[i]
        for i in range(d):
            value[i] -= (cap + 1) * g[i]
        acc[idx] = 0

    walk(0, bound)

    found: list[tuple] = []
    for element, members in groups.items():
        if len(members) < 2:
            continue
        grade = h.grade(element)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                z1, z2 = members[a], members[b]
                if any(x and y for x, y in zip(z1, z2)):
                    continue
                if (sum(z1), z1) < (sum(z2), z2):
                    z1, z2 = z2, z1
                found.append((grade, element, FactorizationRelation(z1, z2)))
    found.sort(key=lambda item: (item[0], item[1], item[2].left))
    return [rel for _, _, rel in found]
