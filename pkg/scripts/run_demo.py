"""End-to-end walkthrough on the two bundled desk examples.

Builds both sessions in memory, then prints the derived assessment, the
simplification trace, the consistency verdict, and a choice query for each.

Usage: python scripts/run_demo.py
"""

from __future__ import annotations

from choicekit import (
    ChoiceStatement,
    OptionSet,
    OptionVec,
    OutcomeSpace,
    choose,
    derive_assessment,
    is_consistent,
    simplify,
)
from choicekit.serialize import option_set_to_json, vector_to_json
from choicekit.simplify import RemoveDominatedStep, RemoveSetStep, RemoveZeroStep


def show_set(option_set: OptionSet) -> str:
    return "{" + ", ".join(f"({', '.join(v)})" for v in option_set_to_json(option_set)) + "}"


def show_vec(vector: OptionVec) -> str:
    return "(" + ", ".join(vector_to_json(vector)) + ")"


def run_session(title, space, menus_and_choices, query):
    print(f"\n=== {title} ===")
    statements = [
        ChoiceStatement(context=OptionSet(space, menu), chosen=OptionSet(space, kept))
        for menu, kept in menus_and_choices
    ]
    assessment = derive_assessment(statements, space)
    print(f"derived assessment ({len(assessment)} sets):")
    for s in assessment:
        print(f"  {show_set(s)}")

    report = simplify(assessment)
    print(f"simplification ({len(report.steps)} steps):")
    for step in report.steps:
        if isinstance(step, RemoveZeroStep):
            print(f"  drop zero from {show_set(step.set_before)}")
        elif isinstance(step, RemoveDominatedStep):
            print(
                f"  drop {show_vec(step.removed)}: bounded by {step.mu} x "
                f"{show_vec(step.partner)}"
            )
        elif isinstance(step, RemoveSetStep):
            print(f"  drop set {show_set(step.removed_set)}: implied by the rest")
    print("reduced to:")
    for s in report.output:
        print(f"  {show_set(s)}")

    verdict = is_consistent(report.output)
    print(f"consistent: {verdict.consistent}")

    result = choose(report.output, OptionSet(space, query))
    print(f"query {show_set(OptionSet(space, query))}")
    print(f"  chosen:   {show_set(result.chosen)}")
    print(f"  rejected: {show_set(result.rejected)}")


def main() -> None:
    plane = OutcomeSpace(["delivered", "undelivered"])
    vec2 = lambda *c: OptionVec(plane, c)
    run_session(
        "order preparation (2 outcomes)",
        plane,
        [
            (
                [vec2(5, -3), vec2(3, -2), vec2(1, -1), vec2(-2, 1)],
                [vec2(5, -3), vec2(3, -2)],
            ),
            ([vec2(3, 1), vec2(-4, 8)], [vec2(-4, 8)]),
        ],
        [vec2(-3, 4), vec2(0, 1), vec2(4, -3)],
    )

    match = OutcomeSpace(["first_2_0", "draw_1_1", "second_2_0"])
    vec3 = lambda *c: OptionVec(match, c)
    run_session(
        "match bets (3 outcomes)",
        match,
        [
            (
                [vec3(-4, 1, -1), vec3(3, -5, -1), vec3(-3, 1, -1), vec3(4, 0, -4), vec3(3, -5, 4)],
                [vec3(4, 0, -4), vec3(3, -5, 4)],
            ),
            (
                [vec3(-4, 2, 4), vec3(-2, -4, 3), vec3(0, -4, 2), vec3(0, 3, -5), vec3(2, 1, 3)],
                [vec3(-4, 2, 4)],
            ),
            (
                [vec3(-4, 1, 4), vec3(-2, -2, 4), vec3(-5, 3, 4)],
                [vec3(-4, 1, 4), vec3(-2, -2, 4)],
            ),
        ],
        [
            vec3(-1, -1, 2), vec3(-4, -4, 6), vec3(-2, -10, 6), vec3(-1, 0, -2),
            vec3(-2, 8, -6), vec3(2, -4, 4), vec3(4, -6, 1), vec3(-3, 8, 5),
            vec3(2, 9, -9), vec3(1, 7, -3),
        ],
    )


if __name__ == "__main__":
    main()
