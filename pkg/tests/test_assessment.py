import pytest
from hypothesis import given
from hypothesis import strategies as st

from choicekit import (
    Assessment,
    ChoiceStatement,
    InvalidStatementError,
    OptionSet,
    OptionVec,
    derive_assessment,
    validate_statement,
)

from conftest import oset
from strategies import option_sets, spaces, vectors


def test_derive_two_outcome_example(two_outcome):
    derived = derive_assessment(two_outcome.statements, two_outcome.space)
    assert derived == two_outcome.derived
    assert len(derived) == 3


def test_keeping_everything_contributes_nothing(plane):
    menu = oset(plane, (1, 2), (3, 4))
    st_all = ChoiceStatement(context=menu, chosen=menu)
    assert derive_assessment([st_all], plane) == Assessment(plane)


def test_derive_three_outcome_has_eight_sets(three_outcome):
    derived = derive_assessment(three_outcome.statements, three_outcome.space)
    assert len(derived) == 8


def test_validate_statement_cases(plane):
    menu = oset(plane, (1, 0), (0, 1))
    outside = oset(plane, (5, 5))
    assert validate_statement(ChoiceStatement(context=menu, chosen=outside)) == [
        "chosen is not a subset of context"
    ]
    empty = OptionSet(plane)
    violations = validate_statement(ChoiceStatement(context=menu, chosen=empty))
    assert violations == ["chosen is empty: at least one option must be kept"]
    assert validate_statement(
        ChoiceStatement(context=menu, chosen=oset(plane, (1, 0)))
    ) == []
    both = validate_statement(ChoiceStatement(context=empty, chosen=empty))
    assert "context is empty" in both


def test_derive_rejects_invalid_statement(plane):
    menu = oset(plane, (1, 0))
    bad = ChoiceStatement(context=menu, chosen=oset(plane, (2, 2)))
    with pytest.raises(InvalidStatementError) as err:
        derive_assessment([ChoiceStatement(context=menu, chosen=menu), bad], plane)
    assert err.value.index == 1
    assert "subset" in str(err.value)


def test_assessment_dedup_and_determinism(plane):
    a = oset(plane, (1, 2))
    b = oset(plane, (0, 1), (1, 0))
    first = Assessment(plane, [a, b, a])
    second = Assessment(plane, [b, a])
    assert first == second
    assert len(first) == 2
    assert first.sets == second.sets


@st.composite
def statement_lists(draw):
    space = draw(spaces())
    count = draw(st.integers(min_value=0, max_value=3))
    statements = []
    for _ in range(count):
        context = draw(option_sets(space, max_size=3, min_size=1))
        size = draw(st.integers(min_value=1, max_value=len(context)))
        chosen = OptionSet(space, context.elements[:size])
        statements.append(ChoiceStatement(context=context, chosen=chosen))
    return space, statements


@given(statement_lists())
def test_derive_size_bound(case):
    space, statements = case
    derived = derive_assessment(statements, space)
    assert len(derived) <= sum(len(s.rejected) for s in statements)


@given(statement_lists(), st.randoms(use_true_random=False))
def test_derive_order_invariant(case, rng):
    space, statements = case
    shuffled = list(statements)
    rng.shuffle(shuffled)
    assert derive_assessment(statements, space) == derive_assessment(shuffled, space)


@given(statement_lists())
def test_translates_may_contain_zero_at_this_layer(case):
    space, statements = case
    derived = derive_assessment(statements, space)
    for statement in statements:
        for rejected in statement.rejected:
            assert statement.chosen.translate(rejected) in derived
