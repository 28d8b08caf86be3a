"""Canonical JSON forms for every engine value.

Rationals travel as strings ("n" or "p/q"), vectors as arrays ordered by the
outcome list, option sets and assessments in their deterministic element
order.  No floats appear anywhere, so exactness survives serialization, and
re-serializing a parsed document is byte-stable.  Both the CLI and the HTTP
service speak exactly these forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

from .assessment import Assessment, ChoiceStatement
from .extension import ChoiceResult, ConsistencyResult, MembershipResult
from .numeric import RationalParseError, format_rational, parse_rational
from .simplify import (
    RemoveDominatedStep,
    RemoveSetStep,
    RemoveZeroStep,
    SimplificationReport,
    Step,
)
from .space import OptionSet, OptionVec, OutcomeSpace


class ProblemFormatError(ValueError):
    """Malformed problem document; the message names the offending path."""


@dataclass(frozen=True)
class ProblemFile:
    """A batch problem: one knowledge source plus optional query sets."""

    space: OutcomeSpace
    statements: tuple[ChoiceStatement, ...] | None
    assessment: Assessment | None
    queries: tuple[OptionSet, ...]


# ---------------------------------------------------------------------------
# Encoding
# ---------------------------------------------------------------------------


def vector_to_json(vector: OptionVec) -> list[str]:
    return [format_rational(c) for c in vector.coords]


def option_set_to_json(option_set: OptionSet) -> list[list[str]]:
    return [vector_to_json(v) for v in option_set]


def assessment_to_json(assessment: Assessment) -> list[list[list[str]]]:
    return [option_set_to_json(s) for s in assessment]


def statement_to_json(statement: ChoiceStatement) -> dict[str, Any]:
    return {
        "context": option_set_to_json(statement.context),
        "chosen": option_set_to_json(statement.chosen),
    }


def membership_to_json(
    result: MembershipResult, *, include_witnesses: bool = True
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "member": result.member,
        "positive_witness": (
            vector_to_json(result.positive_witness)
            if result.positive_witness is not None
            else None
        ),
        "counterexample": (
            [vector_to_json(v) for v in result.counterexample]
            if result.counterexample is not None
            else None
        ),
    }
    if include_witnesses:
        if result.tuple_witnesses is None:
            doc["witnesses"] = None
        else:
            doc["witnesses"] = [
                {
                    "tuple": [vector_to_json(v) for v in combo],
                    "s": vector_to_json(witness.s),
                    "mu": [format_rational(m) for m in witness.certificate.mu],
                    "lambda": [format_rational(l) for l in witness.certificate.lam],
                }
                for combo, witness in result.tuple_witnesses.items()
            ]
        doc["witnesses_truncated"] = result.witnesses_truncated
    return doc


def consistency_to_json(
    result: ConsistencyResult, *, include_witnesses: bool = True
) -> dict[str, Any]:
    return {
        "consistent": result.consistent,
        "probe": membership_to_json(result.probe, include_witnesses=include_witnesses),
    }


def choice_to_json(result: ChoiceResult, *, include_witnesses: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "options": option_set_to_json(result.options),
        "chosen": option_set_to_json(result.chosen),
        "rejected": option_set_to_json(result.rejected),
    }
    if include_witnesses:
        doc["rejections"] = [
            {
                "option": vector_to_json(option),
                "membership": membership_to_json(result.rejections[option]),
            }
            for option in result.rejected
        ]
    return doc


def step_to_json(step: Step) -> dict[str, Any]:
    if isinstance(step, RemoveZeroStep):
        return {"rule": step.rule, "set": option_set_to_json(step.set_before)}
    if isinstance(step, RemoveDominatedStep):
        return {
            "rule": step.rule,
            "set": option_set_to_json(step.set_before),
            "removed": vector_to_json(step.removed),
            "partner": vector_to_json(step.partner),
            "mu": format_rational(step.mu),
        }
    if isinstance(step, RemoveSetStep):
        return {
            "rule": step.rule,
            "removed_set": option_set_to_json(step.removed_set),
            "witness": membership_to_json(step.witness),
        }
    raise TypeError(f"unknown step type {type(step).__name__}")


def report_to_json(report: SimplificationReport, *, include_steps: bool = True) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "input": assessment_to_json(report.input),
        "output": assessment_to_json(report.output),
    }
    if include_steps:
        doc["steps"] = [step_to_json(s) for s in report.steps]
    return doc


def problem_to_json(problem: ProblemFile) -> dict[str, Any]:
    doc: dict[str, Any] = {"outcomes": list(problem.space.labels)}
    if problem.statements is not None:
        doc["statements"] = [statement_to_json(st) for st in problem.statements]
    if problem.assessment is not None:
        doc["assessment"] = assessment_to_json(problem.assessment)
    if problem.queries:
        doc["queries"] = [option_set_to_json(q) for q in problem.queries]
    return doc


def canonical_dumps(doc: Any) -> str:
    """The one JSON rendering used everywhere results are compared or stored."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


def parse_vector(space: OutcomeSpace, doc: Any, where: str = "vector") -> OptionVec:
    if not isinstance(doc, list):
        raise ProblemFormatError(f"{where}: expected an array of rationals")
    if len(doc) != space.dimension:
        raise ProblemFormatError(
            f"{where}: expected {space.dimension} coordinates, got {len(doc)}"
        )
    coords = []
    for i, item in enumerate(doc):
        if not isinstance(item, (str, int)):
            raise ProblemFormatError(
                f"{where}[{i}]: rationals must be strings or integers, got "
                f"{type(item).__name__}"
            )
        try:
            coords.append(parse_rational(str(item)))
        except RationalParseError as exc:
            raise ProblemFormatError(f"{where}[{i}]: {exc}") from exc
    return OptionVec(space, coords)


def parse_option_set(space: OutcomeSpace, doc: Any, where: str = "option set") -> OptionSet:
    if not isinstance(doc, list):
        raise ProblemFormatError(f"{where}: expected an array of vectors")
    return OptionSet(
        space, (parse_vector(space, v, f"{where}[{i}]") for i, v in enumerate(doc))
    )


def parse_statement(space: OutcomeSpace, doc: Any, where: str = "statement") -> ChoiceStatement:
    if not isinstance(doc, dict) or set(doc) != {"context", "chosen"}:
        raise ProblemFormatError(f"{where}: expected keys 'context' and 'chosen'")
    return ChoiceStatement(
        context=parse_option_set(space, doc["context"], f"{where}.context"),
        chosen=parse_option_set(space, doc["chosen"], f"{where}.chosen"),
    )


def parse_space(doc: Any) -> OutcomeSpace:
    if not isinstance(doc, list) or not all(isinstance(lb, str) for lb in doc):
        raise ProblemFormatError("outcomes: expected an array of labels")
    try:
        return OutcomeSpace(doc)
    except ValueError as exc:
        raise ProblemFormatError(f"outcomes: {exc}") from exc


def parse_problem(doc: Any) -> ProblemFile:
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem document must be a JSON object")
    unknown = set(doc) - {"outcomes", "statements", "assessment", "queries"}
    if unknown:
        raise ProblemFormatError(f"unknown keys: {sorted(unknown)}")
    if "outcomes" not in doc:
        raise ProblemFormatError("missing 'outcomes'")
    space = parse_space(doc["outcomes"])

    has_statements = "statements" in doc
    has_assessment = "assessment" in doc
    if has_statements == has_assessment:
        raise ProblemFormatError(
            "exactly one of 'statements' or 'assessment' must be present"
        )

    statements: tuple[ChoiceStatement, ...] | None = None
    assessment: Assessment | None = None
    if has_statements:
        raw = doc["statements"]
        if not isinstance(raw, list):
            raise ProblemFormatError("statements: expected an array")
        statements = tuple(
            parse_statement(space, st, f"statements[{i}]") for i, st in enumerate(raw)
        )
    else:
        raw = doc["assessment"]
        if not isinstance(raw, list):
            raise ProblemFormatError("assessment: expected an array of option sets")
        assessment = Assessment(
            space,
            (parse_option_set(space, s, f"assessment[{i}]") for i, s in enumerate(raw)),
        )

    queries: tuple[OptionSet, ...] = ()
    if "queries" in doc:
        raw = doc["queries"]
        if not isinstance(raw, list):
            raise ProblemFormatError("queries: expected an array of option sets")
        queries = tuple(
            parse_option_set(space, q, f"queries[{i}]") for i, q in enumerate(raw)
        )

    return ProblemFile(
        space=space, statements=statements, assessment=assessment, queries=queries
    )


def load_problem(text: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_problem(doc)
