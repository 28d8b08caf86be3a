"""Recorded choice statements and the assessment they induce.

A choice statement records which options were kept from an offered menu.
Every rejected option u contributes the translated set ``chosen - u`` to the
assessment: a set of differences at least one of which must be preferred to
zero.  Assessments are deduplicated sets of option sets in a deterministic
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .space import OptionSet, OutcomeSpace, SpaceMismatchError


class InvalidStatementError(ValueError):
    """A choice statement violating its invariants, with the violation list."""

    def __init__(self, violations: list[str], index: int | None = None) -> None:
        self.violations = violations
        self.index = index
        where = f"statement {index}: " if index is not None else ""
        super().__init__(where + "; ".join(violations))


@dataclass(frozen=True)
class ChoiceStatement:
    """An offered menu (context) together with the options kept from it."""

    context: OptionSet
    chosen: OptionSet

    @property
    def rejected(self) -> OptionSet:
        return self.context.difference(self.chosen)

    def validate(self) -> list[str]:
        return validate_statement(self)


def validate_statement(statement: ChoiceStatement) -> list[str]:
    """All invariant violations of a statement; empty when it is well-formed."""
    violations: list[str] = []
    if statement.context.space != statement.chosen.space:
        violations.append("context and chosen use different outcome spaces")
        return violations
    if len(statement.context) == 0:
        violations.append("context is empty")
    if len(statement.chosen) == 0:
        violations.append("chosen is empty: at least one option must be kept")
    if not statement.chosen.issubset(statement.context):
        violations.append("chosen is not a subset of context")
    return violations


class Assessment:
    """A deduplicated finite set of option sets over one outcome space."""

    __slots__ = ("space", "sets")

    def __init__(self, space: OutcomeSpace, sets: Iterable[OptionSet] = ()) -> None:
        unique: dict[tuple, OptionSet] = {}
        for s in sets:
            if s.space != space:
                raise SpaceMismatchError("option set does not belong to this outcome space")
            unique[s.sort_key] = s
        self.space = space
        self.sets: tuple[OptionSet, ...] = tuple(unique[k] for k in sorted(unique))

    def __iter__(self) -> Iterator[OptionSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, item: OptionSet) -> bool:
        return any(s == item for s in self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Assessment):
            return NotImplemented
        return self.space == other.space and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.space, self.sets))

    def __repr__(self) -> str:
        return f"Assessment({list(self.sets)!r})"

    def without(self, member: OptionSet) -> Assessment:
        return Assessment(self.space, (s for s in self.sets if s != member))

    def replace(self, old: OptionSet, new: OptionSet) -> Assessment:
        return Assessment(self.space, (new if s == old else s for s in self.sets))

    @property
    def total_options(self) -> int:
        return sum(len(s) for s in self.sets)


def derive_assessment(
    statements: Sequence[ChoiceStatement], space: OutcomeSpace
) -> Assessment:
    """Translate statements into the induced assessment.

    For each statement and each rejected option u, the set ``chosen - u``
    is recorded; duplicates collapse.  Statements that keep the whole menu
    carry no information and contribute nothing.  Raises
    :class:`InvalidStatementError` naming the first offending statement.
    """
    sets: list[OptionSet] = []
    for index, statement in enumerate(statements):
        if statement.context.space != space:
            raise InvalidStatementError(
                ["statement uses a different outcome space"], index=index
            )
        violations = validate_statement(statement)
        if violations:
            raise InvalidStatementError(violations, index=index)
        for rejected in statement.rejected:
            sets.append(statement.chosen.translate(rejected))
    return Assessment(space, sets)
