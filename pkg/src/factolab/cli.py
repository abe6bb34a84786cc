"""Command-line interface.

Every subcommand reads JSON (from a file argument or stdin via ``-``) and/or
simple flags, and writes a single deterministic JSON document to stdout
(``indent=2, sort_keys=True``).  Exit codes:

* 0 — success,
* 1 — bad input: unreadable file, malformed JSON (reported with line and
  column), or a value the library rejects,
* 2 — ``gallery`` ran but at least one fixture disagreed with its expected
  classification.

The gallery truncation defaults to 4 and can be set with the
``FACTOLAB_TRUNCATION_K`` environment variable; an explicit ``--k`` flag
overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .classify import classify, relation_evidence
from .construct import MasterSpec, build_master_monoid, fixture_gallery, pls_example, verify_gallery
from .monoid import (
    MonoidPresentation,
    enumerate_factorizations,
    normalize_atoms,
)
from .linalg import format_rational, parse_rational
from .semiring import (
    SemiringPolynomial,
    algebra_witness,
    case1_relation,
    natural_atom_test,
)

TRUNCATION_ENV = "FACTOLAB_TRUNCATION_K"


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _load_presentation(path: str, normalize: bool) -> MonoidPresentation:
    presentation = MonoidPresentation.from_json_dict(_read_json(path))
    if normalize:
        presentation = normalize_atoms(presentation)
    return presentation


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommand handlers: each returns an exit code
# ---------------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    presentation = _load_presentation(args.presentation, args.normalize)
    report = classify(presentation)
    _emit(report.to_json_dict())
    return 0


def _cmd_factorize(args) -> int:
    presentation = _load_presentation(args.presentation, args.normalize)
    element = [parse_rational(part) for part in args.element.split(",")]
    factorizations = enumerate_factorizations(presentation, element)
    _emit(
        {
            "element": [format_rational(x) for x in element],
            "factorizations": [list(z) for z in factorizations],
            "lengths": sorted({sum(z) for z in factorizations}),
        }
    )
    return 0


def _cmd_construct_master(args) -> int:
    spec = MasterSpec(tuple(args.long), tuple(args.short))
    presentation = build_master_monoid(spec)
    report = classify(presentation)
    _emit(
        {
            "presentation": presentation.to_json_dict(),
            "report": report.to_json_dict(),
        }
    )
    return 0


def _cmd_pls_example(args) -> int:
    presentation = pls_example(args.purely_long, args.purely_short)
    report = classify(presentation)
    _emit(
        {
            "presentation": presentation.to_json_dict(),
            "report": report.to_json_dict(),
        }
    )
    return 0


def _resolve_truncation(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get(TRUNCATION_ENV)
    if raw is None:
        return 4
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"environment variable {TRUNCATION_ENV}={raw!r} is not an integer"
        )


def _cmd_gallery(args) -> int:
    truncation = _resolve_truncation(args.k)
    gallery = fixture_gallery(truncation=truncation)
    mismatches = verify_gallery(gallery)
    _emit(
        {
            "truncation": truncation,
            "fixtures": [
                {
                    "name": fixture.name,
                    "presentation": fixture.presentation.to_json_dict(),
                    "expected": fixture.expected,
                }
                for fixture in gallery
            ],
            "mismatches": mismatches,
        }
    )
    return 2 if mismatches else 0


def _cmd_semiring_atom(args) -> int:
    poly = SemiringPolynomial.from_json_dict(_read_json(args.polynomial))
    is_atom, witness = natural_atom_test(poly)
    _emit(
        {
            "is_atom": is_atom,
            "witness": (
                None
                if witness is None
                else {
                    "factor": witness[0].to_json_dict(),
                    "cofactor": witness[1].to_json_dict(),
                }
            ),
        }
    )
    return 0


def _cmd_algebra_witness(args) -> int:
    witness = algebra_witness(args.a, args.b)
    factor_list = lambda z: [
        {"factor": poly.to_json_dict(), "multiplicity": mult} for poly, mult in z
    ]
    _emit(
        {
            "a": witness.a,
            "b": witness.b,
            "p": witness.p,
            "q": witness.q,
            "r": witness.r,
            "s": witness.s,
            "c": witness.c,
            "a1": witness.a1.to_json_dict(),
            "a2": witness.a2.to_json_dict(),
            "z1": factor_list(witness.z1),
            "z2": factor_list(witness.z2),
            "product": witness.product.to_json_dict(),
            "factorization_length": witness.factorization_length,
            "monoid": witness.monoid.to_json_dict(),
        }
    )
    return 0


def _cmd_case1(args) -> int:
    presentation = _load_presentation(args.presentation, normalize=False)
    relation = case1_relation(presentation, args.i, args.j)
    element = sum(
        (m * g[0] for m, g in zip(relation.left, presentation.generators)),
        start=parse_rational(0),
    )
    payload = relation.to_json_dict()
    payload["element"] = format_rational(element)
    _emit(payload)
    return 0


def _cmd_evidence(args) -> int:
    presentation = _load_presentation(args.presentation, args.normalize)
    relations = relation_evidence(presentation, args.bound)
    _emit({"bound": args.bound, "relations": [r.to_json_dict() for r in relations]})
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factolab",
        description=(
            "Exact factorization-theory workbench: classify finitely "
            "generated pointed monoids, construct extremal examples, and "
            "verify monoid-semiring witnesses."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def presentation_arg(p):
        p.add_argument(
            "presentation",
            help="path to a presentation JSON file, or - for stdin",
        )

    def normalize_flag(p):
        p.add_argument(
            "--normalize",
            action="store_true",
            help="drop duplicate and non-atom generators before working",
        )

    p = sub.add_parser("analyze", help="classify a monoid presentation")
    presentation_arg(p)
    normalize_flag(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("factorize", help="enumerate factorizations of an element")
    presentation_arg(p)
    p.add_argument(
        "--element",
        required=True,
        help="comma-separated rational coordinates, e.g. 12 or 0,2,2",
    )
    normalize_flag(p)
    p.set_defaults(handler=_cmd_factorize)

    p = sub.add_parser(
        "construct-master",
        help="build a monoid whose master relation has given multiplicities",
    )
    p.add_argument("--long", type=int, nargs="+", required=True,
                   help="multiplicities of the long side")
    p.add_argument("--short", type=int, nargs="+", required=True,
                   help="multiplicities of the short side")
    p.set_defaults(handler=_cmd_construct_master)

    p = sub.add_parser(
        "pls-example",
        help="smallest monoid with the given pure-atom counts",
    )
    p.add_argument("purely_long", type=int)
    p.add_argument("purely_short", type=int)
    p.set_defaults(handler=_cmd_pls_example)

    p = sub.add_parser(
        "gallery",
        help="classify the fixture gallery and diff against expectations",
    )
    p.add_argument(
        "--k",
        type=int,
        default=None,
        help=f"truncation size (default 4, or ${TRUNCATION_ENV})",
    )
    p.set_defaults(handler=_cmd_gallery)

    p = sub.add_parser(
        "semiring-atom",
        help="decide atomicity of a polynomial over natural coefficients",
    )
    p.add_argument(
        "polynomial",
        help="path to a polynomial JSON file, or - for stdin",
    )
    p.set_defaults(handler=_cmd_semiring_atom)

    p = sub.add_parser(
        "algebra-witness",
        help="equal-length double factorization in a monoid algebra",
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_algebra_witness)

    p = sub.add_parser(
        "case1",
        help="canonical unbalanced relation between two monomial atoms",
    )
    presentation_arg(p)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(handler=_cmd_case1)

    p = sub.add_parser(
        "evidence",
        help="all irredundant relations up to a grading bound",
    )
    presentation_arg(p)
    p.add_argument("--bound", type=int, required=True)
    normalize_flag(p)
    p.set_defaults(handler=_cmd_evidence)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except json.JSONDecodeError as exc:
        print(
            f"error: invalid JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}",
            file=sys.stderr,
        )
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
