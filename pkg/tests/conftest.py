from __future__ import annotations

from dataclasses import dataclass

import pytest

from choicekit import (
    Assessment,
    ChoiceStatement,
    OptionSet,
    OptionVec,
    OutcomeSpace,
    derive_assessment,
)


@dataclass(frozen=True)
class TwoOutcomeExample:
    """Two recorded choices over a 2-outcome space, with the induced pieces."""

    space: OutcomeSpace
    statements: tuple[ChoiceStatement, ...]
    derived: Assessment
    reduced: Assessment  # equivalent 2-set form after full simplification
    query: OptionSet
    query_chosen: OptionSet


@dataclass(frozen=True)
class ThreeOutcomeExample:
    """Three recorded bets over match outcomes, plus the 10-option query."""

    space: OutcomeSpace
    statements: tuple[ChoiceStatement, ...]
    query: OptionSet
    query_chosen: OptionSet


def vec(space: OutcomeSpace, *coords) -> OptionVec:
    return OptionVec(space, coords)


def oset(space: OutcomeSpace, *vectors) -> OptionSet:
    return OptionSet(space, [OptionVec(space, v) for v in vectors])


@pytest.fixture(scope="session")
def plane() -> OutcomeSpace:
    return OutcomeSpace(["good", "bad"])


@pytest.fixture(scope="session")
def two_outcome(plane: OutcomeSpace) -> TwoOutcomeExample:
    menu_a = oset(plane, (5, -3), (3, -2), (1, -1), (-2, 1))
    kept_a = oset(plane, (5, -3), (3, -2))
    menu_b = oset(plane, (3, 1), (-4, 8))
    kept_b = oset(plane, (-4, 8))
    statements = (
        ChoiceStatement(context=menu_a, chosen=kept_a),
        ChoiceStatement(context=menu_b, chosen=kept_b),
    )
    derived = Assessment(
        plane,
        [
            oset(plane, (4, -2), (2, -1)),
            oset(plane, (7, -4), (5, -3)),
            oset(plane, (-7, 7)),
        ],
    )
    reduced = Assessment(plane, [oset(plane, (7, -4)), oset(plane, (-7, 7))])
    return TwoOutcomeExample(
        space=plane,
        statements=statements,
        derived=derived,
        reduced=reduced,
        query=oset(plane, (-3, 4), (0, 1), (4, -3)),
        query_chosen=oset(plane, (-3, 4)),
    )


@pytest.fixture(scope="session")
def three_outcome() -> ThreeOutcomeExample:
    space = OutcomeSpace(["first_2_0", "draw_1_1", "second_2_0"])
    menu1 = oset(space, (-4, 1, -1), (3, -5, -1), (-3, 1, -1), (4, 0, -4), (3, -5, 4))
    kept1 = oset(space, (4, 0, -4), (3, -5, 4))
    menu2 = oset(space, (-4, 2, 4), (-2, -4, 3), (0, -4, 2), (0, 3, -5), (2, 1, 3))
    kept2 = oset(space, (-4, 2, 4))
    menu3 = oset(space, (-4, 1, 4), (-2, -2, 4), (-5, 3, 4))
    kept3 = oset(space, (-4, 1, 4), (-2, -2, 4))
    statements = (
        ChoiceStatement(context=menu1, chosen=kept1),
        ChoiceStatement(context=menu2, chosen=kept2),
        ChoiceStatement(context=menu3, chosen=kept3),
    )
    query = oset(
        space,
        (-1, -1, 2),
        (-4, -4, 6),
        (-2, -10, 6),
        (-1, 0, -2),
        (-2, 8, -6),
        (2, -4, 4),
        (4, -6, 1),
        (-3, 8, 5),
        (2, 9, -9),
        (1, 7, -3),
    )
    return ThreeOutcomeExample(
        space=space,
        statements=statements,
        query=query,
        query_chosen=oset(space, (-4, -4, 6), (-2, -10, 6), (-3, 8, 5)),
    )


@pytest.fixture(scope="session")
def two_outcome_assessment(two_outcome: TwoOutcomeExample) -> Assessment:
    return derive_assessment(two_outcome.statements, two_outcome.space)
