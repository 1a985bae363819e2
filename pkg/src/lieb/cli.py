"""Command-line front end: check / construct / solve / catalog.

Exit codes: 0 every requested check passed (possibly conditionally),
1 at least one check failed, 2 the input failed to parse, 3 an internal
invariant was violated.  Reports are plain text or canonical JSON
(sorted keys, two-space indent, trailing newline), so a JSON report
re-serialises byte-identically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog as _catalog
from .document import (
    ParseError,
    default_checks,
    parse_document,
    render_document,
    run_check_statement,
    run_constructs,
)
from .multilinear import BilinearForm, PivotAmbiguous
from .scalars import Assumption, ExpressionError, parse_scalar
from .solver import LinearProblem, solve_linear
from .structures import LieAlgebra, LieCoalgebra

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INTERNAL = 3

_PROBLEM_KINDS = ("weak-symplectic", "ad-invariance", "cocycle-in-delta", "co-cybe-slice")


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(canonical_json(payload))
        return
    for line in payload.get("lines", []):
        print(line)


def _parse_assume_flags(values) -> list[Assumption]:
    out = []
    for text in values or []:
        scalar = parse_scalar(text)
        if not scalar.den.is_constant():
            raise ExpressionError("assumption must be polynomial (clear denominators)", 0)
        out.append(Assumption(scalar.num))
    return out


def _report_entry(stmt, report) -> dict:
    return {
        "check": stmt.kind,
        "args": list(stmt.args),
        "verdict": str(report.verdict),
        "residual_count": len(report.residuals),
        "residuals": [
            {"identity": r.identity, "index": list(r.index), "value": str(r.value)}
            for r in report.residuals
        ],
        "assumptions_used": [str(a) for a in report.assumptions_used],
    }


def _run_document_checks(doc, identities, extra_assumptions):
    statements = doc.checks or default_checks(doc)
    if identities:
        statements = [s for s in statements if s.kind in identities]
    results = []
    for stmt in statements:
        report = run_check_statement(doc, stmt, tuple(extra_assumptions))
        results.append((stmt, report))
    return results


def _cmd_check(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = parse_document(text)
    run_constructs(doc)
    extra = _parse_assume_flags(args.assume)
    results = _run_document_checks(doc, args.identity, extra)
    failed = any(not report.passed for _, report in results)
    payload = {
        "command": "check",
        "file": args.file,
        "results": [_report_entry(stmt, report) for stmt, report in results],
        "exit_code": EXIT_CHECK_FAILED if failed else EXIT_OK,
    }
    payload["lines"] = [
        f"{entry['check']} {' '.join(entry['args'])}: {entry['verdict']}"
        + (f" ({entry['residual_count']} residuals)" if entry["residual_count"] else "")
        + (f" [assuming {', '.join(entry['assumptions_used'])}]"
           if entry["assumptions_used"] else "")
        for entry in payload["results"]
    ]
    if args.format == "json":
        payload.pop("lines")
    _emit(payload, args.format)
    return payload["exit_code"]


def _cmd_construct(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = parse_document(text)
    run_constructs(doc)
    if args.op not in doc.structures:
        wanted = [c.result for c in doc.constructs]
        raise ParseError(
            f"no construct statement produces {args.op!r} (available: {wanted})", 0, 0)
    result = doc.structures[args.op]
    rendered = render_document({args.op: result}, params=doc.params)
    Path(args.out).write_text(rendered, encoding="utf-8")
    payload = {
        "command": "construct",
        "file": args.file,
        "op": args.op,
        "out": args.out,
        "exit_code": EXIT_OK,
        "lines": [f"wrote {args.op} to {args.out}"],
    }
    if args.format == "json":
        payload.pop("lines")
    _emit(payload, args.format)
    return EXIT_OK


def _first_of(doc, kind):
    for obj in doc.structures.values():
        if isinstance(obj, kind):
            return obj
    raise ParseError(f"the document declares no {kind.__name__}", 0, 0)


def _cmd_solve(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = parse_document(text)
    run_constructs(doc)
    if args.problem == "weak-symplectic":
        problem = LinearProblem.weak_symplectic(_first_of(doc, LieAlgebra))
    elif args.problem == "ad-invariance":
        problem = LinearProblem.ad_invariance(_first_of(doc, LieAlgebra))
    elif args.problem == "cocycle-in-delta":
        problem = LinearProblem.cocycle_in_delta(_first_of(doc, LieAlgebra))
    else:
        problem = LinearProblem.co_cybe_slice(_first_of(doc, LieCoalgebra),
                                              _first_of(doc, BilinearForm))
    solution = solve_linear(problem, tuple(doc.assumptions))
    basis_payload = []
    for idx, element in enumerate(solution.basis):
        rendered = render_document({f"solution_{idx}": element})
        basis_payload.append(rendered)
    payload = {
        "command": "solve",
        "file": args.file,
        "problem": args.problem,
        "dimension": solution.dimension,
        "rank": solution.rank,
        "unknowns": solution.unknowns,
        "basis": basis_payload,
        "exit_code": EXIT_OK,
    }
    payload["lines"] = [
        f"problem {args.problem}: solution dimension {solution.dimension} "
        f"(rank {solution.rank} of {solution.unknowns} unknowns)",
        *[line for rendered in basis_payload for line in rendered.splitlines()
          if line and not line.startswith("#")],
    ]
    if args.format == "json":
        payload.pop("lines")
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.action == "list":
        entries = _catalog.list_entries()
        payload = {
            "command": "catalog",
            "action": "list",
            "entries": [{"id": i, "description": d} for i, d in entries],
            "exit_code": EXIT_OK,
            "lines": [f"{i}: {d}" for i, d in entries],
        }
    elif args.action == "show":
        entry = _catalog.get(args.id)
        rendered = render_document(entry.structures, params=entry.document.params)
        payload = {
            "command": "catalog",
            "action": "show",
            "id": entry.id,
            "description": entry.description,
            "source": entry.source,
            "assumptions": [str(a) for a in entry.assumptions],
            "metadata": entry.metadata,
            "document": rendered,
            "exit_code": EXIT_OK,
            "lines": [f"{entry.id}: {entry.description}",
                      *(f"assuming {a}" for a in entry.assumptions),
                      rendered],
        }
    else:
        entry = _catalog.get(args.id)
        rendered = render_document(entry.structures, params=entry.document.params)
        out = args.out or f"{entry.id}.lieb"
        Path(out).write_text(rendered, encoding="utf-8")
        payload = {
            "command": "catalog",
            "action": "export",
            "id": entry.id,
            "out": out,
            "exit_code": EXIT_OK,
            "lines": [f"wrote {entry.id} to {out}"],
        }
    if args.format == "json":
        payload.pop("lines")
    _emit(payload, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieb",
        description="exact verification of bracket, cobracket and operator identities")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        # accepted after the subcommand too; SUPPRESS keeps the global value
        # when the flag is absent here
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p_check = sub.add_parser("check", help="run the checks declared in a file")
    p_check.add_argument("file")
    p_check.add_argument("--identity", action="append",
                         help="only run checks of this kind (repeatable)")
    p_check.add_argument("--assume", action="append",
                         help="extra nonzero-polynomial assumption (repeatable)")
    add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_construct = sub.add_parser("construct", help="run a named construction and export it")
    p_construct.add_argument("file")
    p_construct.add_argument("--op", required=True,
                             help="result name of a construct statement in the file")
    p_construct.add_argument("--out", required=True)
    add_format(p_construct)
    p_construct.set_defaults(func=_cmd_construct)

    p_solve = sub.add_parser("solve", help="solve a linear classification problem")
    p_solve.add_argument("file")
    p_solve.add_argument("--problem", required=True, choices=_PROBLEM_KINDS)
    p_solve.add_argument("--seed", type=int,
                         default=int(os.environ.get("LIEB_SEED", "0")))
    p_solve.add_argument("--trials", type=int, default=32)
    add_format(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_catalog = sub.add_parser("catalog", help="list, show or export built-in instances")
    p_catalog.add_argument("action", choices=("list", "show", "export"))
    p_catalog.add_argument("id", nargs="?")
    p_catalog.add_argument("--out")
    add_format(p_catalog)
    p_catalog.set_defaults(func=_cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action in ("show", "export") and not args.id:
        parser.error("catalog show/export needs an entry id")
    try:
        return args.func(args)
    except (ParseError, ExpressionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except _catalog.UnknownId as exc:
        print(f"error: unknown catalog id {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (PivotAmbiguous, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
