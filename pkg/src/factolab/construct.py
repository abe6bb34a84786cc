"""Constructors for monoids with prescribed factorization behaviour.

Three families are provided:

* ``build_master_monoid`` realizes any admissible pair of positive integer
  tuples ``(a, b)`` as the unique master factorization relation of a finitely
  generated pointed monoid: ``a`` becomes the multiplicity vector of the long
  side and ``b`` of the short side, every generator is an atom, and the kernel
  lattice of the presentation has rank one.

* ``pls_example`` searches the admissible pairs for given pure-atom counts,
  returning the first admissible ``(a, b)`` under a deterministic ordering, so
  that the resulting monoid has exactly the requested numbers of purely long
  and purely short atoms.

* ``fixture_gallery`` assembles a fixed tour of small presentations whose
  classification outcomes are known in closed form, each paired with the
  expected report fields; ``verify_gallery`` diffs expectations against the
  classifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .classify import AtomLabel, ClassificationReport, classify
from .monoid import MonoidPresentation

__all__ = [
    "Fixture",
    "InvalidMasterSpec",
    "MasterSpec",
    "build_master_monoid",
    "fixture_gallery",
    "pls_example",
    "verify_gallery",
]


class InvalidMasterSpec(ValueError):
    """The requested multiplicity pair cannot be a master relation."""


@dataclass(frozen=True)
class MasterSpec:
    """Multiplicity data ``(a, b)`` for a master factorization relation.

    ``long_side`` lists the multiplicities of the atoms on the long side of
    the relation and ``short_side`` those on the short side.  Admissibility:

    * every entry is a positive integer,
    * the joint gcd of all entries is one (otherwise the relation is a
      multiple of a smaller one),
    * the long side is strictly longer: ``sum(a) > sum(b)``,
    * a short side consisting of a single atom must carry multiplicity at
      least two, or the relation would let that generator be factored into
      the others.  (A lone long atom is forced to multiplicity at least two
      by the sum condition already.)
    """

    long_side: tuple[int, ...]
    short_side: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = self.long_side, self.short_side
        if not a or not b:
            raise InvalidMasterSpec("both sides need at least one atom")
        for entry in (*a, *b):
            if not isinstance(entry, int) or entry < 1:
                raise InvalidMasterSpec(
                    f"multiplicities must be positive integers, got {entry!r}"
                )
        if gcd(*a, *b) != 1:
            raise InvalidMasterSpec(
                "joint gcd of the multiplicities must be 1, "
                f"got {gcd(*a, *b)} for {a} | {b}"
            )
        if sum(a) <= sum(b):
            raise InvalidMasterSpec(
                f"long side must be strictly longer: sum{a} <= sum{b}"
            )
        if len(b) == 1 and b[0] == 1:
            raise InvalidMasterSpec(
                "a single short atom with multiplicity 1 would not be an atom"
            )

    @property
    def long_count(self) -> int:
        return len(self.long_side)

    @property
    def short_count(self) -> int:
        return len(self.short_side)

    def kernel_vector(self) -> tuple[int, ...]:
        """The relation as a lattice vector: long side positive."""
        return (*self.long_side, *(-x for x in self.short_side))


def build_master_monoid(spec: MasterSpec) -> MonoidPresentation:
    """Realize ``spec`` as the master relation of a pointed monoid.

    With ``m`` long atoms and ``n`` short atoms the monoid lives in
    dimension ``m + n - 1``.  The long atoms and all but the last short atom
    are the standard basis vectors; the final short atom is the rational
    vector making ``sum(a_i * alpha_i) == sum(b_j * beta_j)`` hold exactly.
    The kernel lattice of the presentation is then spanned by the requested
    relation, so the classification of the result is fully prescribed.
    """
    m, n = spec.long_count, spec.short_count
    dim = m + n - 1
    generators: list[tuple[Fraction, ...]] = []
    for i in range(dim):
        generators.append(
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
        )
    combined = [Fraction(0)] * dim
    for i, mult in enumerate(spec.long_side):
        combined[i] += mult
    for j, mult in enumerate(spec.short_side[:-1]):
        combined[m + j] -= mult
    last = tuple(Fraction(c, spec.short_side[-1]) for c in combined)
    generators.append(last)
    label = "master-" + "-".join(
        [*map(str, spec.long_side), "over", *map(str, spec.short_side)]
    )
    return MonoidPresentation.from_generators(generators, label=label)


def pls_example(purely_long: int, purely_short: int) -> MonoidPresentation:
    """A monoid with the requested pure-atom counts and no other atoms.

    Searches admissible master specs with ``purely_long`` long atoms and
    ``purely_short`` short atoms in a deterministic order — iterative
    deepening on the maximum multiplicity, then lexicographic on the
    concatenated multiplicity tuple ``a + b`` — and returns the realization
    of the first spec whose classification shows exactly the requested
    numbers of purely long and purely short atoms.
    """
    if purely_long < 1 or purely_short < 1:
        raise ValueError(
            "pure-atom counts must be at least 1: a monoid with a master "
            "relation has at least one atom of each kind"
        )
    for cap in itertools.count(2):
        for a in itertools.product(range(1, cap + 1), repeat=purely_long):
            for b in itertools.product(range(1, cap + 1), repeat=purely_short):
                if cap > 2 and max(*a, *b) != cap:
                    continue  # already visited under a smaller cap
                try:
                    spec = MasterSpec(a, b)
                except InvalidMasterSpec:
                    continue
                monoid = build_master_monoid(spec)
                report = classify(monoid)
                if len(report.purely_long) == purely_long and len(
                    report.purely_short
                ) == purely_short:
                    return monoid
    raise AssertionError("unreachable: the search space is unbounded")


# ---------------------------------------------------------------------------
# fixture gallery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """A named presentation with its expected classification outcomes."""

    name: str
    presentation: MonoidPresentation
    expected: dict = field(compare=False)


def _product_truncation(k: int) -> MonoidPresentation:
    gens: list[tuple[int, ...]] = [(2, 0, 0), (3, 0, 0)]
    for n in range(k + 1):
        gens.append((0, n, 1))
    return MonoidPresentation.from_generators(
        gens, label=f"product-truncation-{k}"
    )


def _signed_truncation(k: int) -> MonoidPresentation:
    gens: list[tuple[int, ...]] = [(2, 0, 0), (3, 0, 0)]
    for n in range(-k, k + 1):
        gens.append((0, n, 1))
    return MonoidPresentation.from_generators(
        gens, label=f"signed-truncation-{k}"
    )


def _strip(k: int) -> MonoidPresentation:
    return MonoidPresentation.from_generators(
        [(n, 1) for n in range(k + 1)], label=f"strip-{k}"
    )


def fixture_gallery(truncation: int = 4) -> list[Fixture]:
    """A tour of presentations whose classifications are known exactly.

    ``truncation`` bounds the truncated families; every truncation at least 2
    produces the same verdicts, which is what the gallery check asserts.
    """
    if truncation < 2:
        raise ValueError("truncation must be at least 2")
    k = truncation
    gallery = [
        Fixture(
            name="lfm-pair-2-3",
            presentation=MonoidPresentation.from_values([2, 3], label="2-3"),
            expected={
                "kernel_rank": 1,
                "is_ufm": False,
                "is_lfm": True,
                "is_hfm": False,
                "is_plsm": True,
                "purely_long": (0,),
                "purely_short": (1,),
                "prime": (),
                "master": {"left": [3, 0], "right": [0, 2]},
            },
        ),
        Fixture(
            name="non-lfm-triple-3-4-5",
            presentation=MonoidPresentation.from_values(
                [3, 4, 5], label="3-4-5"
            ),
            expected={
                "kernel_rank": 2,
                "is_ufm": False,
                "is_lfm": False,
                "is_hfm": False,
                "is_plsm": False,
                "purely_long": (),
                "purely_short": (),
                "prime": (),
                "master": None,
            },
        ),
        Fixture(
            name="scaled-triple-3-4-5-over-7",
            presentation=MonoidPresentation.from_values(
                [Fraction(3, 7), Fraction(4, 7), Fraction(5, 7)],
                label="3-4-5-over-7",
            ),
            expected={
                "kernel_rank": 2,
                "is_ufm": False,
                "is_lfm": False,
                "is_hfm": False,
                "is_plsm": False,
                "purely_long": (),
                "purely_short": (),
                "prime": (),
                "master": None,
            },
        ),
        Fixture(
            name=f"pure-pair-with-neither-cloud-{k}",
            presentation=_product_truncation(k),
            expected={
                "kernel_rank": k,
                "is_ufm": False,
                "is_lfm": False,
                "is_hfm": False,
                "is_plsm": True,
                "purely_long": (0,),
                "purely_short": (1,),
                "prime": (),
                "master": None,
            },
        ),
        Fixture(
            name=f"signed-neither-cloud-{k}",
            presentation=_signed_truncation(k),
            expected={
                "kernel_rank": 2 * k,
                "is_ufm": False,
                "is_lfm": False,
                "is_hfm": False,
                "is_plsm": True,
                "purely_long": (0,),
                "purely_short": (1,),
                "prime": (),
                "master": None,
            },
        ),
        Fixture(
            name=f"half-factorial-strip-{k}",
            presentation=_strip(k),
            expected={
                "kernel_rank": k - 1,
                "is_ufm": False,
                "is_lfm": False,
                "is_hfm": True,
                "is_plsm": False,
                "purely_long": (),
                "purely_short": (),
                "prime": (),
                "master": None,
            },
        ),
    ]
    return gallery


_CHECKED_FIELDS = (
    "kernel_rank",
    "is_ufm",
    "is_lfm",
    "is_hfm",
    "is_plsm",
    "purely_long",
    "purely_short",
    "prime",
    "master",
)


def _report_field(report: ClassificationReport, name: str):
    if name == "master":
        return None if report.master is None else report.master.to_json_dict()
    return getattr(report, name)


def verify_gallery(
    gallery: Optional[Sequence[Fixture]] = None,
) -> list[str]:
    """Classify every fixture and diff against its expectations.

    Returns a list of human-readable mismatch lines; an empty list means the
    gallery is clean.
    """
    mismatches: list[str] = []
    for fixture in gallery if gallery is not None else fixture_gallery():
        report = classify(fixture.presentation)
        for key, want in fixture.expected.items():
            if key not in _CHECKED_FIELDS:
                mismatches.append(f"{fixture.name}: unknown expected field {key}")
                continue
            got = _report_field(report, key)
            if got != want:
                mismatches.append(
                    f"{fixture.name}: {key} expected {want!r}, got {got!r}"
                )
    return mismatches
