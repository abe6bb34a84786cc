"""factolab: exact factorization-theory workbench.

Classify finitely generated pointed commutative monoids given by rational
generator vectors (unique / length / half factoriality, prime and purely
long or short atoms, master relations), construct extremal examples, and
verify irreducibility witnesses in monoid semirings.
"""

from .classify import (
    AtomLabel,
    ClassificationReport,
    FactorizationRelation,
    classify,
    master_relation,
    prime_atoms,
    pure_atom_labels,
    relation_evidence,
)
from .construct import (
    Fixture,
    InvalidMasterSpec,
    MasterSpec,
    build_master_monoid,
    fixture_gallery,
    pls_example,
    verify_gallery,
)
from .linalg import (
    DimensionMismatch,
    IntMatrix,
    LatticeBasis,
    format_rational,
    homogeneous_lp_feasible,
    homogeneous_lp_witness,
    integer_kernel,
    parse_rational,
    rational_num_den,
)
from .monoid import (
    DuplicateGenerator,
    Grading,
    InvalidGenerator,
    MonoidPresentation,
    NotAnAtom,
    NotNormalized,
    NotPointed,
    atomic_divisors,
    length_set,
    enumerate_factorizations,
    ensure_normalized,
    normalize_atoms,
    validate_presentation,
)
from .semiring import (
    AlgebraWitness,
    InternalContradiction,
    InvalidPair,
    NumericalMonoid,
    SemiringPolynomial,
    algebra_witness,
    binomial_irreducibility_check,
    case1_relation,
    is_additive_atom,
    monoid_elements_up_to,
    natural_atom_test,
    poly_divide_exact,
    poly_mul,
    poly_pow,
    rank_one_membership,
)

__all__ = [
    "AlgebraWitness",
    "AtomLabel",
    "ClassificationReport",
    "DimensionMismatch",
    "DuplicateGenerator",
    "FactorizationRelation",
    "Fixture",
    "Grading",
    "IntMatrix",
    "InternalContradiction",
    "InvalidGenerator",
    "InvalidMasterSpec",
    "InvalidPair",
    "LatticeBasis",
    "MasterSpec",
    "MonoidPresentation",
    "NotAnAtom",
    "NotNormalized",
    "NotPointed",
    "NumericalMonoid",
    "SemiringPolynomial",
    "algebra_witness",
    "atomic_divisors",
    "binomial_irreducibility_check",
    "build_master_monoid",
    "case1_relation",
    "classify",
    "ensure_normalized",
    "enumerate_factorizations",
    "fixture_gallery",
    "format_rational",
    "homogeneous_lp_feasible",
    "homogeneous_lp_witness",
    "integer_kernel",
    "is_additive_atom",
    "length_set",
    "master_relation",
    "monoid_elements_up_to",
    "natural_atom_test",
    "normalize_atoms",
    "parse_rational",
    "pls_example",
    "poly_divide_exact",
    "poly_mul",
    "poly_pow",
    "prime_atoms",
    "pure_atom_labels",
    "rank_one_membership",
    "rational_num_den",
    "relation_evidence",
    "validate_presentation",
    "verify_gallery",
]

__version__ = "0.1.0"
