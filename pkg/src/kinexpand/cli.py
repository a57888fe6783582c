"""Command-line interface.

Subcommands::

    check-jacobi ALGEBRA            Jacobi identity on a catalog or file algebra
    bracket ALGEBRA GEN GEN         one structure-constant lookup
    normal-form ALGEBRA EXPR        normal-order an expression
    casimir-check ALGEBRA           centrality of C1 and C2
    identity ALGEBRA LHS RHS        exact identity check
    expand TARGET                   run an expansion driver
    contract ALGEBRA                contraction round-trips
    corpus                          identity corpus + Casimir centrality
    report                          everything, as one document

``ALGEBRA`` is a catalog name (galilei, galilei_ext, poincare, newton_hooke,
euclid4) or a path to an algebra definition file.  Reports are emitted as
text or JSON (``--format``); JSON reports carry a ``schema_version`` field.
Exit status is 0 exactly when every expected verdict holds, including the
expected closure *failure* of the ``negative-nh`` driver.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algfile import JacobiViolationError, parse_algebra_file
from .checks import (
    casimir_centrality,
    contraction_suite,
    identity_corpus,
    structural_suite,
)
from .expansion import (
    DRIVERS,
    EUCLID_WITNESS,
    THEOREM1_WITNESS,
    THEOREM2_WITNESS,
    ConstraintViolationError,
)
from .exprparse import ExprParseError, parse_expression
from .liealg import (
    catalog,
    catalog_names,
    format_vector,
    jacobi_check,
    parameter_contract,
)
from .properties import (
    check_associativity,
    check_pbw_canonicity,
    check_ring_axioms,
    check_uea_jacobi,
)
from .uea import format_element, is_central, named_element

SCHEMA_VERSION = 1

OUTPUT_DIR_ENV = "KINEXPAND_OUTPUT_DIR"


def _load_algebra(ref: str, allow_non_lie: bool = False):
    if ref in catalog_names():
        return catalog(ref)
    return parse_algebra_file(ref, allow_non_lie=allow_non_lie)


def _parse_witness(pairs):
    witness = {}
    for item in pairs or ():
        name, eq, value = item.partition("=")
        if not eq:
            raise SystemExit(f"bad witness override {item!r}: expected name=rational")
        try:
            witness[name] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SystemExit(f"bad rational {value!r} in witness override")
    return witness


def _emit(doc: dict, args) -> None:
    """Print the report; also write it when an output directory is set."""
    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    else:
        text = _render_text(doc)
    sys.stdout.write(text)
    outdir = os.environ.get(OUTPUT_DIR_ENV)
    if outdir:
        path = Path(outdir) / f"{doc['command']}.{args.format}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def _render_text(doc: dict, indent: int = 0) -> str:
    lines = []

    def walk(value, key, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                walk(v, k, depth + 1)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}:")
            for v in value:
                if isinstance(v, dict):
                    label = v.get("label") or v.get("pair") or v.get("driver") or ""
                    status = v.get("passed", v.get("verdict", v.get("ok", "")))
                    detail = v.get("detail") or v.get("residual") or ""
                    extra = f"  {detail}" if detail else ""
                    lines.append(f"{pad}  {label}: {status}{extra}")
                else:
                    lines.append(f"{pad}  {v}")
        else:
            lines.append(f"{pad}{key}: {value}")

    for k, v in doc.items():
        walk(v, k, indent)
    return "\n".join(lines) + "\n"


def _check_section(results):
    return {
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }


# -- subcommand implementations ---------------------------------------------


def cmd_check_jacobi(args) -> int:
    try:
        alg = _load_algebra(args.algebra, allow_non_lie=True)
    except JacobiViolationError as exc:
        print(f"load error: {exc}")
        return 1
    violations = jacobi_check(alg)
    doc = {
        "command": "check-jacobi",
        "schema_version": SCHEMA_VERSION,
        "algebra": alg.name,
        "passed": not violations,
        "violations": [
            {
                "triple": [alg.generators[i].name for i in v.triple],
                "residual": format_vector(alg, v.residual),
            }
            for v in violations
        ],
    }
    _emit(doc, args)
    return 0 if not violations else 1


def cmd_bracket(args) -> int:
    alg = _load_algebra(args.algebra, allow_non_lie=args.allow_non_lie)
    try:
        i = alg.gen_index[args.left]
        j = alg.gen_index[args.right]
    except KeyError as exc:
        raise SystemExit(f"unknown generator {exc.args[0]!r}")
    result = alg.bracket_pair(i, j)
    print(format_vector(alg, result))
    return 0


def cmd_normal_form(args) -> int:
    alg = _load_algebra(args.algebra, allow_non_lie=args.allow_non_lie)
    try:
        el = parse_expression(args.expression, alg)
    except ExprParseError as exc:
        raise SystemExit(f"parse error: {exc}")
    print(format_element(el))
    return 0


def cmd_casimir_check(args) -> int:
    alg = _load_algebra(args.algebra)
    checks = []
    ok_all = True
    for key in ("C1", "C2"):
        ok, witness = is_central(alg, named_element(alg, key))
        ok_all &= ok
        checks.append(
            {
                "label": f"{key} central in {alg.name}",
                "passed": ok,
                "detail": "" if ok else f"fails against {witness}",
            }
        )
    if "Xi" in alg.gen_index:
        from .uea import UEAElement

        ok, witness = is_central(alg, UEAElement.generator(alg, "Xi"))
        ok_all &= ok
        checks.append({"label": f"Xi central in {alg.name}", "passed": ok, "detail": ""})
    doc = {
        "command": "casimir-check",
        "schema_version": SCHEMA_VERSION,
        "algebra": alg.name,
        "passed": ok_all,
        "checks": checks,
    }
    _emit(doc, args)
    return 0 if ok_all else 1


def cmd_identity(args) -> int:
    alg = _load_algebra(args.algebra, allow_non_lie=args.allow_non_lie)
    try:
        lhs = parse_expression(args.lhs, alg)
        rhs = parse_expression(args.rhs, alg)
    except ExprParseError as exc:
        raise SystemExit(f"parse error: {exc}")
    residual = lhs - rhs
    passed = residual.is_zero()
    doc = {
        "command": "identity",
        "schema_version": SCHEMA_VERSION,
        "algebra": alg.name,
        "passed": passed,
        "residual": format_element(residual),
    }
    _emit(doc, args)
    return 0 if passed else 1


def cmd_expand(args) -> int:
    driver = DRIVERS[args.target]
    overrides = _parse_witness(args.witness)
    defaults = {
        "poincare": THEOREM1_WITNESS,
        "euclid4": EUCLID_WITNESS,
        "newton_hooke": THEOREM2_WITNESS,
    }
    try:
        if overrides and args.target in defaults:
            run = driver({**defaults[args.target], **overrides})
        else:
            run = driver()
    except ConstraintViolationError as exc:
        raise SystemExit(f"witness rejected: {exc}")
    doc = {"command": "expand", "schema_version": SCHEMA_VERSION, **run.to_dict()}
    _emit(doc, args)
    return 0 if run.ok else 1


def cmd_contract(args) -> int:
    alg = _load_algebra(args.algebra)
    galilei = catalog("galilei")
    results = []
    if args.param:
        contracted = parameter_contract(alg, args.param)
        ok = contracted.same_structure(galilei)
        results.append(
            {
                "label": f"{alg.name} at {args.param}->0 equals catalog galilei",
                "passed": ok,
                "detail": "",
            }
        )
        print(f"equals catalog galilei: {str(ok).lower()}")
    else:
        for r in contraction_suite():
            results.append(r.to_dict())
    passed = all(r["passed"] for r in results)
    doc = {
        "command": "contract",
        "schema_version": SCHEMA_VERSION,
        "passed": passed,
        "checks": results,
    }
    if not args.param:
        _emit(doc, args)
    return 0 if passed else 1


def cmd_corpus(args) -> int:
    corpus = identity_corpus()
    centrality = casimir_centrality()
    passed = all(r.passed for r in corpus + centrality)
    doc = {
        "command": "corpus",
        "schema_version": SCHEMA_VERSION,
        "passed": passed,
        "identities": _check_section(corpus),
        "centrality": _check_section(centrality),
    }
    _emit(doc, args)
    return 0 if passed else 1


def cmd_report(args) -> int:
    rng = random.Random(args.seed)
    galilei = catalog("galilei")
    prop_failures = (
        check_ring_axioms(rng, galilei.ctx, 25)
        + check_pbw_canonicity(rng, galilei, 10)
        + check_associativity(rng, galilei, 5)
        + check_uea_jacobi(rng, galilei, 5)
    )
    drivers = []
    for name in ("poincare", "euclid4", "newton_hooke", "negative-nh"):
        drivers.append(DRIVERS[name]().to_dict())
    sections = {
        "structural": _check_section(structural_suite()),
        "corpus": _check_section(identity_corpus()),
        "centrality": _check_section(casimir_centrality()),
        "contractions": _check_section(contraction_suite()),
        "expansions": drivers,
        "properties": {
            "seed": args.seed,
            "passed": not prop_failures,
            "failures": prop_failures,
        },
    }
    passed = (
        sections["structural"]["passed"]
        and sections["corpus"]["passed"]
        and sections["centrality"]["passed"]
        and sections["contractions"]["passed"]
        and all(d["ok"] for d in drivers)
        and not prop_failures
    )
    doc = {
        "command": "report",
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "seed": args.seed,
        "passed": passed,
        **sections,
    }
    _emit(doc, args)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinexpand",
        description="Exact symbolic engine for kinematical Lie algebra "
        "expansions and contractions.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    parser.add_argument(
        "--seed", type=int, default=20240901, help="random seed for property sampling"
    )
    parser.add_argument(
        "--allow-non-lie",
        action="store_true",
        help="load algebra files even when the Jacobi identity fails",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-jacobi", help="Jacobi identity check")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_check_jacobi)

    p = sub.add_parser("bracket", help="structure-constant lookup")
    p.add_argument("algebra")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("normal-form", help="normal-order an expression")
    p.add_argument("algebra")
    p.add_argument("expression")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("casimir-check", help="Casimir centrality")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_casimir_check)

    p = sub.add_parser("identity", help="exact identity check")
    p.add_argument("algebra")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("expand", help="run an expansion driver")
    p.add_argument("target", choices=tuple(DRIVERS))
    p.add_argument(
        "--witness",
        action="append",
        metavar="NAME=RATIONAL",
        help="override witness values (repeatable)",
    )
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("contract", help="contraction round-trips")
    p.add_argument("algebra")
    p.add_argument("--param", help="curvature parameter to send to zero")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("corpus", help="identity corpus and centrality checks")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("report", help="run every check and emit one document")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
