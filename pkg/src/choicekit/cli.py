"""File-driven batch interface.

Subcommands: derive | simplify | consistent | member | choose.  Problems are
JSON documents (see serialize); results print as canonical JSON so repeated
runs and the HTTP service produce byte-identical output.

Exit codes: 0 ok/consistent/member, 1 inconsistent or not-member,
2 validation error, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from typing import Sequence

from .assessment import Assessment, InvalidStatementError, derive_assessment
from .extension import (
    DEFAULT_MAX_WITNESS_TUPLES,
    InconsistentAssessmentError,
    choose,
    is_consistent,
    is_in_extension,
)
from .serialize import (
    ProblemFile,
    ProblemFormatError,
    assessment_to_json,
    canonical_dumps,
    choice_to_json,
    consistency_to_json,
    load_problem,
    membership_to_json,
    report_to_json,
)
from .simplify import simplify
from .space import SpaceMismatchError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _knowledge(problem: ProblemFile, pre_simplify: bool) -> Assessment:
    if problem.statements is not None:
        assessment = derive_assessment(problem.statements, problem.space)
    else:
        assert problem.assessment is not None
        assessment = problem.assessment
    if pre_simplify:
        assessment = simplify(assessment).output
    return assessment


def _require_queries(problem: ProblemFile) -> None:
    if not problem.queries:
        raise ProblemFormatError("this command needs a 'queries' array")


def cmd_derive(problem: ProblemFile, args: argparse.Namespace) -> int:
    if problem.statements is None:
        raise ProblemFormatError("derive needs 'statements' as the knowledge source")
    assessment = derive_assessment(problem.statements, problem.space)
    print(canonical_dumps({"assessment": assessment_to_json(assessment)}), end="")
    return EXIT_OK


def cmd_simplify(problem: ProblemFile, args: argparse.Namespace) -> int:
    report = simplify(_knowledge(problem, pre_simplify=False))
    print(canonical_dumps(report_to_json(report, include_steps=args.steps)), end="")
    return EXIT_OK


def cmd_consistent(problem: ProblemFile, args: argparse.Namespace) -> int:
    assessment = _knowledge(problem, args.simplify)
    result = is_consistent(assessment, max_witness_tuples=args.max_tuples)
    print("CONSISTENT" if result.consistent else "INCONSISTENT")
    print(
        canonical_dumps(consistency_to_json(result, include_witnesses=args.witnesses)),
        end="",
    )
    return EXIT_OK if result.consistent else EXIT_NEGATIVE


def cmd_member(problem: ProblemFile, args: argparse.Namespace) -> int:
    _require_queries(problem)
    assessment = _knowledge(problem, args.simplify)
    results = [
        is_in_extension(query, assessment, max_witness_tuples=args.max_tuples)
        for query in problem.queries
    ]
    doc = {
        "queries": [
            membership_to_json(r, include_witnesses=args.witnesses) for r in results
        ]
    }
    print(canonical_dumps(doc), end="")
    return EXIT_OK if all(r.member for r in results) else EXIT_NEGATIVE


def cmd_choose(problem: ProblemFile, args: argparse.Namespace) -> int:
    _require_queries(problem)
    assessment = _knowledge(problem, args.simplify)
    docs = []
    for query in problem.queries:
        result = choose(assessment, query, max_witness_tuples=args.max_tuples)
        docs.append(choice_to_json(result, include_witnesses=args.witnesses))
    print(canonical_dumps({"queries": docs}), end="")
    return EXIT_OK


_COMMANDS = {
    "derive": cmd_derive,
    "simplify": cmd_simplify,
    "consistent": cmd_consistent,
    "member": cmd_member,
    "choose": cmd_choose,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choicekit",
        description="Exact inference from recorded choices: derive, simplify, "
        "check consistency, test membership, choose.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("derive", "derive the assessment induced by choice statements"),
        ("simplify", "reduce an assessment to an equivalent smaller one"),
        ("consistent", "check whether the knowledge admits a coherent extension"),
        ("member", "test query sets for membership in the natural extension"),
        ("choose", "partition query sets into chosen and rejected options"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", "-i", help="problem JSON file (default: stdin)")
        cmd.add_argument(
            "--simplify",
            action="store_true",
            help="pre-simplify the knowledge before answering",
        )
        cmd.add_argument(
            "--witnesses",
            action="store_true",
            help="include exact witnesses in the output",
        )
        cmd.add_argument(
            "--steps", action="store_true", help="include the rewrite log (simplify)"
        )
        cmd.add_argument(
            "--max-tuples",
            type=int,
            default=DEFAULT_MAX_WITNESS_TUPLES,
            help="witness-retention threshold on the tuple product size",
        )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = load_problem(_read_input(args.input))
        return _COMMANDS[args.command](problem, args)
    except (ProblemFormatError, InvalidStatementError, SpaceMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InconsistentAssessmentError as exc:
        print("INCONSISTENT: the knowledge admits no coherent extension", file=sys.stderr)
        print(
            canonical_dumps(consistency_to_json(exc.result)), end="", file=sys.stderr
        )
        return EXIT_NEGATIVE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception:  # pragma: no cover - defensive
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
