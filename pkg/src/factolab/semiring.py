"""Monoid semirings: polynomials with exponents in a rank-one monoid.

The objects here are polynomial-like expressions ``sum c_i * x^(e_i)`` whose
exponents ``e_i`` range over either the natural numbers or a one-dimensional
pointed monoid given by positive rational generators, and whose coefficients
come from one of two domains:

* ``"N"`` — nonnegative integers.  The only multiplicative unit is 1 and the
  additive atoms are exactly the monomials with coefficient 1, which makes
  multiplicative atomicity decidable by a finite complete search.
* ``"Q"`` — rationals.  Every nonzero constant is a unit; this is the right
  ambient space for the binomial constructions below.

Division is performed exactly in the ambient rational Laurent-free setting
and then validated against the coefficient domain and exponent monoid, so a
``None`` answer from :func:`poly_divide_exact` really means "no factorization
with this divisor exists in the semiring".

The module also builds, for any coprime pair ``2 <= a < b``, a pair of
irreducible binomials in the monoid algebra of the numerical monoid
generated by ``a`` and ``b`` whose powers assemble into one element with two
atom-disjoint factorizations of the same length (:func:`algebra_witness`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from .classify import FactorizationRelation
from .linalg import Rational, format_rational, parse_rational
from .monoid import MonoidPresentation

__all__ = [
    "AlgebraWitness",
    "InternalContradiction",
    "InvalidPair",
    "NumericalMonoid",
    "SemiringPolynomial",
    "algebra_witness",
    "binomial_irreducibility_check",
    "case1_relation",
    "is_additive_atom",
    "monoid_elements_up_to",
    "natural_atom_test",
    "poly_divide_exact",
    "poly_mul",
    "poly_pow",
    "rank_one_membership",
]


class InvalidPair(ValueError):
    """The requested generator pair does not admit the construction."""


class InternalContradiction(RuntimeError):
    """A property the construction guarantees failed to verify."""


# ---------------------------------------------------------------------------
# numerical monoids
# ---------------------------------------------------------------------------


class NumericalMonoid:
    """Membership oracle for the monoid generated by coprime positive ints.

    The membership table is grown by doubling until the top ``min(gens)``
    consecutive entries are all members; from that point on every larger
    integer is a member (add the smallest generator repeatedly), so the
    table certifies itself and ``contains`` is a constant-time lookup.
    """

    def __init__(self, generators: Sequence[int]):
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if gcd(*gens) != 1:
            raise ValueError(
                f"generators {gens} have gcd {gcd(*gens)}; "
                "membership beyond the table would be undecidable"
            )
        self.generators = gens
        size = 2 * gens[-1] + 2
        step = gens[0]
        while True:
            table = [False] * size
            table[0] = True
            for n in range(1, size):
                table[n] = any(n >= g and table[n - g] for g in gens)
            if all(table[size - step:]):
                break
            size *= 2
        self._table = tuple(table)

    @property
    def frontier(self) -> int:
        """Every integer at or beyond this bound is a member."""
        return len(self._table) - self.generators[0]

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n < len(self._table):
            return self._table[n]
        return True

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def gaps(self) -> tuple[int, ...]:
        """The finitely many nonnegative integers outside the monoid."""
        return tuple(n for n, ok in enumerate(self._table) if not ok)

    def __repr__(self) -> str:
        return f"NumericalMonoid{self.generators}"


@lru_cache(maxsize=None)
def _rank_one_scaling(presentation: MonoidPresentation):
    """Scale a one-dimensional presentation onto a numerical monoid.

    Returns ``(unit, numerical)`` so that a rational ``x`` lies in the
    monoid iff ``x / unit`` is a nonnegative integer in ``numerical``.
    """
    if presentation.ambient_dim != 1:
        raise ValueError("exponent monoids must be one-dimensional")
    values = [g[0] for g in presentation.generators]
    if any(v <= 0 for v in values):
        raise ValueError("exponent monoid generators must be positive")
    denominator = lcm(*(v.denominator for v in values))
    numerators = [v.numerator * (denominator // v.denominator) for v in values]
    common = gcd(*numerators)
    unit = Fraction(common, denominator)
    return unit, NumericalMonoid([n // common for n in numerators])


def rank_one_membership(presentation: MonoidPresentation, value: Rational) -> bool:
    """Exact membership test for a one-dimensional monoid presentation."""
    unit, numerical = _rank_one_scaling(presentation)
    scaled = parse_rational(value) / unit
    return scaled.denominator == 1 and numerical.contains(scaled.numerator)


def monoid_elements_up_to(
    exponent_monoid: Optional[MonoidPresentation], bound: Fraction
) -> list[Fraction]:
    """All monoid elements up to ``bound``, ascending.

    ``None`` stands for the natural numbers.
    """
    if bound < 0:
        return []
    if exponent_monoid is None:
        return [Fraction(n) for n in range(int(bound) + 1)]
    unit, numerical = _rank_one_scaling(exponent_monoid)
    elements = []
    n = 0
    while n * unit <= bound:
        if numerical.contains(n):
            elements.append(n * unit)
        n += 1
    return elements


# ---------------------------------------------------------------------------
# semiring polynomials
# ---------------------------------------------------------------------------


def _validate_exponent(
    exponent: Fraction, exponent_monoid: Optional[MonoidPresentation]
) -> bool:
    if exponent_monoid is None:
        return exponent >= 0 and exponent.denominator == 1
    return rank_one_membership(exponent_monoid, exponent)


@dataclass(frozen=True)
class SemiringPolynomial:
    """A sparse polynomial over a coefficient domain and exponent monoid.

    ``terms`` maps exponents to nonzero coefficients, stored sorted by
    descending exponent.  ``coeff_domain`` is ``"N"`` (nonnegative integers)
    or ``"Q"`` (rationals).  ``exponent_monoid`` is ``None`` for natural
    exponents or a one-dimensional presentation of a Puiseux-type monoid.
    Use :meth:`from_terms` rather than the raw constructor; it normalizes,
    merges and validates.
    """

    terms: tuple[tuple[Fraction, Fraction], ...]
    coeff_domain: str = "N"
    exponent_monoid: Optional[MonoidPresentation] = None

    @classmethod
    def from_terms(
        cls,
        terms,
        coeff_domain: str = "N",
        exponent_monoid: Optional[MonoidPresentation] = None,
    ) -> "SemiringPolynomial":
        if coeff_domain not in ("N", "Q"):
            raise ValueError(f"unknown coefficient domain {coeff_domain!r}")
        merged: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exponent, coefficient in items:
            e = parse_rational(exponent)
            c = parse_rational(coefficient)
            merged[e] = merged.get(e, Fraction(0)) + c
        cleaned = []
        for e, c in merged.items():
            if c == 0:
                continue
            if coeff_domain == "N" and (c < 0 or c.denominator != 1):
                raise ValueError(
                    f"coefficient {c} is not a nonnegative integer"
                )
            if not _validate_exponent(e, exponent_monoid):
                raise ValueError(f"exponent {e} lies outside the monoid")
            cleaned.append((e, c))
        cleaned.sort(key=lambda t: t[0], reverse=True)
        return cls(tuple(cleaned), coeff_domain, exponent_monoid)

    @classmethod
    def monomial(
        cls,
        exponent: Rational,
        coefficient: Rational = 1,
        coeff_domain: str = "N",
        exponent_monoid: Optional[MonoidPresentation] = None,
    ) -> "SemiringPolynomial":
        return cls.from_terms(
            [(exponent, coefficient)], coeff_domain, exponent_monoid
        )

    @classmethod
    def zero(
        cls,
        coeff_domain: str = "N",
        exponent_monoid: Optional[MonoidPresentation] = None,
    ) -> "SemiringPolynomial":
        return cls.from_terms([], coeff_domain, exponent_monoid)

    @classmethod
    def one(
        cls,
        coeff_domain: str = "N",
        exponent_monoid: Optional[MonoidPresentation] = None,
    ) -> "SemiringPolynomial":
        return cls.from_terms([(0, 1)], coeff_domain, exponent_monoid)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((Fraction(0), Fraction(1)),)

    @property
    def max_exponent(self) -> Optional[Fraction]:
        return self.terms[0][0] if self.terms else None

    @property
    def max_coefficient(self) -> Optional[Fraction]:
        return max(c for _, c in self.terms) if self.terms else None

    @property
    def leading(self) -> tuple[Fraction, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def same_semiring(self, other: "SemiringPolynomial") -> bool:
        return (
            self.coeff_domain == other.coeff_domain
            and self.exponent_monoid == other.exponent_monoid
        )

    def __add__(self, other: "SemiringPolynomial") -> "SemiringPolynomial":
        if not self.same_semiring(other):
            raise ValueError("cannot add across different semirings")
        return SemiringPolynomial.from_terms(
            list(self.terms) + list(other.terms),
            self.coeff_domain,
            self.exponent_monoid,
        )

    def __mul__(self, other: "SemiringPolynomial") -> "SemiringPolynomial":
        return poly_mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = ""
        for e, c in self.terms:
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if e == 0:
                body = format_rational(magnitude)
            else:
                prefix = "" if magnitude == 1 else f"{format_rational(magnitude)}*"
                suffix = "" if e == 1 else f"^{format_rational(e)}"
                body = f"{prefix}x{suffix}"
            if not rendered:
                rendered = body if sign == "+" else f"-{body}"
            else:
                rendered += f" {sign} {body}"
        return rendered

    def to_json_dict(self) -> dict:
        return {
            "coeff_domain": self.coeff_domain,
            "monoid": (
                "N0"
                if self.exponent_monoid is None
                else self.exponent_monoid.to_json_dict()
            ),
            "terms": [
                [format_rational(e), format_rational(c)] for e, c in self.terms
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SemiringPolynomial":
        if not isinstance(data, dict) or "terms" not in data:
            raise ValueError("polynomial JSON must be an object with 'terms'")
        monoid_data = data.get("monoid", "N0")
        exponent_monoid = (
            None
            if monoid_data == "N0"
            else MonoidPresentation.from_json_dict(monoid_data)
        )
        return cls.from_terms(
            [(e, c) for e, c in data["terms"]],
            data.get("coeff_domain", "N"),
            exponent_monoid,
        )


def poly_mul(
    f: SemiringPolynomial, g: SemiringPolynomial
) -> SemiringPolynomial:
    if not f.same_semiring(g):
        raise ValueError("cannot multiply across different semirings")
    product: dict[Fraction, Fraction] = {}
    for ef, cf in f.terms:
        for eg, cg in g.terms:
            e = ef + eg
            product[e] = product.get(e, Fraction(0)) + cf * cg
    return SemiringPolynomial.from_terms(
        product, f.coeff_domain, f.exponent_monoid
    )


def poly_pow(f: SemiringPolynomial, power: int) -> SemiringPolynomial:
    if power < 0:
        raise ValueError("negative powers are not defined in a semiring")
    result = SemiringPolynomial.one(f.coeff_domain, f.exponent_monoid)
    for _ in range(power):
        result = poly_mul(result, f)
    return result


def poly_divide_exact(
    f: SemiringPolynomial, g: SemiringPolynomial
) -> Optional[SemiringPolynomial]:
    """The unique ``h`` with ``f == g * h`` in the semiring, else ``None``.

    Division runs top-down by leading terms in the ambient rational setting,
    where quotients are unique; the candidate quotient is then admitted only
    if its coefficients fit the domain and its exponents lie in the monoid.
    Exponent denominators stay within a fixed lattice, so the leading
    exponent strictly decreases through a discrete set and the loop ends.
    """
    if not f.same_semiring(g):
        raise ValueError("cannot divide across different semirings")
    if g.is_zero():
        raise ValueError("division by zero")
    if f.is_zero():
        return SemiringPolynomial.zero(f.coeff_domain, f.exponent_monoid)
    lead_exp, lead_coeff = g.leading
    remainder = dict(f.terms)
    quotient: list[tuple[Fraction, Fraction]] = []
    while remainder:
        e_top = max(remainder)
        if e_top < lead_exp:
            return None
        q_exp = e_top - lead_exp
        q_coeff = remainder[e_top] / lead_coeff
        quotient.append((q_exp, q_coeff))
        for eg, cg in g.terms:
            e = q_exp + eg
            value = remainder.get(e, Fraction(0)) - q_coeff * cg
            if value == 0:
                remainder.pop(e, None)
            else:
                remainder[e] = value
    try:
        return SemiringPolynomial.from_terms(
            quotient, f.coeff_domain, f.exponent_monoid
        )
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# atom decisions
# ---------------------------------------------------------------------------


def natural_atom_test(
    f: SemiringPolynomial,
) -> tuple[bool, Optional[tuple[SemiringPolynomial, SemiringPolynomial]]]:
    """Decide multiplicative atomicity over nonnegative integer coefficients.

    Returns ``(True, None)`` when ``f`` is an atom, ``(False, (g, h))`` with
    a factorization ``f == g * h`` into non-units when it is not, and
    ``(False, None)`` for zero and one, which are not atoms by convention.

    The search is complete: with nonnegative coefficients there is no
    cancellation, so every factor of ``f`` has coefficients bounded by the
    largest coefficient of ``f`` and exponents bounded by its largest
    exponent.  Candidate divisors are enumerated over exactly that box (with
    exponents restricted to the exponent monoid) in lexicographic order,
    varying the coefficient of the largest exponent fastest, and the first
    divisor found is returned.
    """
    if f.coeff_domain != "N":
        raise ValueError(
            "the complete atom search needs nonnegative integer coefficients"
        )
    if f.is_zero() or f.is_one():
        return False, None
    exponents = monoid_elements_up_to(f.exponent_monoid, f.max_exponent)
    top_coeff = int(f.max_coefficient)
    for coeffs in itertools.product(range(top_coeff + 1), repeat=len(exponents)):
        candidate = SemiringPolynomial.from_terms(
            [(e, c) for e, c in zip(exponents, coeffs) if c],
            "N",
            f.exponent_monoid,
        )
        if candidate.is_zero() or candidate.is_one():
            continue
        quotient = poly_divide_exact(f, candidate)
        if quotient is not None and not quotient.is_one():
            return False, (candidate, quotient)
    return True, None


def is_additive_atom(f: SemiringPolynomial) -> bool:
    """Whether ``f`` is an atom of the additive monoid of the semiring.

    Over nonnegative integer coefficients the additive atoms are exactly the
    monomials with coefficient 1.  Over rational coefficients the additive
    monoid has no atoms at all (everything halves), so the answer is False.
    """
    if f.coeff_domain != "N":
        return False
    return len(f.terms) == 1 and f.terms[0][1] == 1


def binomial_irreducibility_check(f: SemiringPolynomial) -> bool:
    """Check a two-term polynomial for monomial divisors.

    ``False`` certifies reducibility: some generator monomial ``x^g``
    divides ``f``, because both exponents stay in the monoid after
    subtracting ``g`` (and any nontrivial monomial divisor can be replaced
    by a generator one).  ``True`` certifies that no monomial divides ``f``;
    when the exponent gap of ``f`` is the smallest positive element of the
    ambient exponent lattice — the case produced by
    :func:`algebra_witness` — monomial divisors are the only possible ones,
    so ``True`` then certifies full irreducibility.
    """
    if len(f.terms) != 2:
        raise ValueError("this check applies to two-term polynomials")
    if f.exponent_monoid is None:
        raise ValueError("the ambient monoid must be given explicitly")
    (e_high, _), (e_low, _) = f.terms
    for generator in f.exponent_monoid.generators:
        g = generator[0]
        if rank_one_membership(
            f.exponent_monoid, e_high - g
        ) and rank_one_membership(f.exponent_monoid, e_low - g):
            return False
    return True


def case1_relation(
    presentation: MonoidPresentation, i: int, j: int
) -> FactorizationRelation:
    """The canonical unbalanced relation between two monomial atoms.

    For atoms ``x^(q_i)`` and ``x^(q_j)`` of a monoid semiring with
    one-dimensional exponent monoid, writing ``q = n/d`` in lowest terms,
    the powers ``(x^(q_i))^(n_j * d_i)`` and ``(x^(q_j))^(n_i * d_j)`` agree
    — both equal ``x^(n_i * n_j)`` — giving a relation whose two sides have
    different lengths whenever the exponents differ.  The side of the
    smaller exponent is the longer one.
    """
    if presentation.ambient_dim != 1:
        raise ValueError("monomial atoms need a one-dimensional monoid")
    if i == j:
        raise ValueError("the relation needs two distinct atoms")
    k = presentation.atom_count
    q_i = presentation.generators[i][0]
    q_j = presentation.generators[j][0]
    if q_i == q_j:
        raise ValueError("equal exponents give only the trivial relation")
    mult_i = q_j.numerator * q_i.denominator
    mult_j = q_i.numerator * q_j.denominator
    left = tuple(mult_i if t == i else 0 for t in range(k))
    right = tuple(mult_j if t == j else 0 for t in range(k))
    return FactorizationRelation(left, right)


# ---------------------------------------------------------------------------
# the two-generator algebra witness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraWitness:
    """One element of a monoid algebra with two equal-length factorizations.

    For coprime ``2 <= a < b`` the binomials ``a1 = x^(r*b) - x^(s*a)`` and
    ``a2 = x^(p*a) - x^(q*b)`` (with ``p*a = q*b + 1`` and ``r*b = s*a + 1``)
    are atoms of the rational monoid algebra over the monoid generated by
    ``a`` and ``b``.  The factorization lists ``z1`` and ``z2`` multiply out
    to the same ``product`` while sharing no atom, and both have length
    ``c + b - a`` where ``c = |s*a - q*b|``.
    """

    a: int
    b: int
    p: int
    q: int
    r: int
    s: int
    c: int
    a1: SemiringPolynomial
    a2: SemiringPolynomial
    z1: tuple[tuple[SemiringPolynomial, int], ...]
    z2: tuple[tuple[SemiringPolynomial, int], ...]
    product: SemiringPolynomial
    monoid: MonoidPresentation
    numerical: NumericalMonoid = field(compare=False)

    @property
    def factorization_length(self) -> int:
        return self.c + self.b - self.a

    def factors_multiply_out(self) -> bool:
        for factors in (self.z1, self.z2):
            result = SemiringPolynomial.one("Q", self.monoid)
            for poly, multiplicity in factors:
                result = poly_mul(result, poly_pow(poly, multiplicity))
            if result != self.product:
                return False
        return True


def algebra_witness(a: int, b: int) -> AlgebraWitness:
    """Build the two-factorization witness for a coprime pair ``a < b``.

    Raises :class:`InvalidPair` when the pair is out of scope and
    :class:`InternalContradiction` when a property the construction is
    supposed to guarantee fails its verification — the latter indicates a
    bug, not bad input.
    """
    if not (isinstance(a, int) and isinstance(b, int)):
        raise InvalidPair("generators must be integers")
    if not (2 <= a < b):
        raise InvalidPair(f"need 2 <= a < b, got a={a}, b={b}")
    if gcd(a, b) != 1:
        raise InvalidPair(f"generators must be coprime, gcd is {gcd(a, b)}")

    p = pow(a, -1, b)
    q = (p * a - 1) // b
    r = pow(b, -1, a)
    s = (r * b - 1) // a
    if p * a - q * b != 1 or r * b - s * a != 1:
        raise InternalContradiction("modular inverses failed to certify")
    if q < 1 or s < 1:
        raise InternalContradiction("cofactors must be positive")

    monoid = MonoidPresentation.from_values([a, b], label=f"numerical-{a}-{b}")
    numerical = NumericalMonoid([a, b])

    def binomial(high: int, low: int) -> SemiringPolynomial:
        return SemiringPolynomial.from_terms(
            [(high, 1), (low, -1)], "Q", monoid
        )

    a1 = binomial(r * b, s * a)
    a2 = binomial(p * a, q * b)
    for name, poly in (("a1", a1), ("a2", a2)):
        if not binomial_irreducibility_check(poly):
            raise InternalContradiction(
                f"{name} admits a monomial divisor for pair ({a}, {b})"
            )

    delta = s * a - q * b
    c = abs(delta)
    if c == 0:
        raise InternalContradiction(
            "the two binomials coincide; the pair cannot be coprime"
        )

    mono_a = SemiringPolynomial.monomial(a, 1, "Q", monoid)
    mono_b = SemiringPolynomial.monomial(b, 1, "Q", monoid)

    # the shift x^c need not lie in the monoid algebra, so the identity
    # relating the two binomials is checked in the ambient algebra
    def ambient(poly: SemiringPolynomial) -> SemiringPolynomial:
        return SemiringPolynomial.from_terms(poly.terms, "Q", None)

    shift = SemiringPolynomial.monomial(c, 1, "Q", None)
    if delta > 0:
        if poly_mul(shift, ambient(a2)) != ambient(a1):
            raise InternalContradiction("shift identity failed for delta > 0")
        z1 = ((mono_a, c), (a1, b - a))
        z2 = ((mono_b, c), (a2, b - a))
    else:
        if poly_mul(shift, ambient(a1)) != ambient(a2):
            raise InternalContradiction("shift identity failed for delta < 0")
        z1 = ((mono_a, c), (a2, b - a))
        z2 = ((mono_b, c), (a1, b - a))

    def multiply_out(factors) -> SemiringPolynomial:
        result = SemiringPolynomial.one("Q", monoid)
        for poly, multiplicity in factors:
            result = poly_mul(result, poly_pow(poly, multiplicity))
        return result

    product = multiply_out(z1)
    if product != multiply_out(z2):
        raise InternalContradiction("the two factorizations disagree")

    return AlgebraWitness(
        a=a,
        b=b,
        p=p,
        q=q,
        r=r,
        s=s,
        c=c,
        a1=a1,
        a2=a2,
        z1=z1,
        z2=z2,
        product=product,
        monoid=monoid,
        numerical=numerical,
    )
