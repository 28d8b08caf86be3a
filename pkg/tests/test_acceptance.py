"""Acceptance gate: one test per criterion, exact values, stated scales.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  All tolerances are zero: the engine is exact, so every expected
value is asserted with plain equality.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from choicekit import (
    Assessment,
    OptionSet,
    OptionVec,
    OutcomeSpace,
    choose,
    derive_assessment,
    fm_oracle,
    is_consistent,
    is_in_extension,
    simplify,
    verify_certificate,
)
from choicekit.cli import main as cli_main
from choicekit.lp import FeasibilityProblem, is_feasible
from choicekit.serialize import canonical_dumps
from choicekit.service import create_app
from choicekit.simplify import RemoveDominatedStep, RemoveSetStep

from conftest import oset
from strategies import (
    random_assessment,
    random_option_set,
    random_positive_weights,
    random_space,
    random_vector,
)


def ok(name: str) -> None:
    print(f"ACCEPTANCE PASS: {name}")


def test_derivation_exact(two_outcome):
    derived = derive_assessment(two_outcome.statements, two_outcome.space)
    assert derived == two_outcome.derived
    ok("derivation: statements yield the exact 3-set assessment")


def test_consistency(two_outcome, two_outcome_assessment, plane):
    verdict = is_consistent(two_outcome_assessment)
    assert verdict.consistent
    assert verdict.counterexample is not None
    assert {v.coords for v in verdict.counterexample} == {
        (Fraction(2), Fraction(-1)),
        (Fraction(5), Fraction(-3)),
        (Fraction(-7), Fraction(7)),
    }
    assert not is_consistent(Assessment(plane, [oset(plane, (0, 0))])).consistent
    assert not is_consistent(Assessment(plane, [OptionSet(plane)])).consistent
    ok("consistency: verdicts and the no-weighting counterexample tuple")


def test_choice_queries(two_outcome, two_outcome_assessment, plane):
    result = choose(two_outcome_assessment, two_outcome.query)
    assert result.chosen == two_outcome.query_chosen
    reduced_result = choose(two_outcome.reduced, oset(plane, (5, -2), (-4, 3)))
    assert reduced_result.rejected == oset(plane, (-4, 3))
    ok("choice: query partitions match on raw and reduced knowledge")


def test_simplification(two_outcome, two_outcome_assessment, plane):
    report = simplify(two_outcome_assessment)
    assert report.output == Assessment(
        plane, [oset(plane, (7, -4)), oset(plane, (-7, 7))]
    )
    mus = {s.mu for s in report.steps if isinstance(s, RemoveDominatedStep)}
    assert mus == {Fraction(2), Fraction(5, 7)}
    (set_step,) = [s for s in report.steps if isinstance(s, RemoveSetStep)]
    ((combo, witness),) = set_step.witness.tuple_witnesses.items()
    weight_of = {v.coords: w for v, w in zip(combo, witness.certificate.lam)}
    assert weight_of[(Fraction(7), Fraction(-4))] == Fraction(1, 4)
    assert weight_of[(Fraction(-7), Fraction(7))] == Fraction(0)
    ok("simplification: exact reduced form with witnesses 2, 5/7 and (1/4, 0)")


def test_three_outcome_end_to_end(three_outcome):
    space = three_outcome.space
    derived = derive_assessment(three_outcome.statements, space)
    assert len(derived) == 8

    report = simplify(derived)
    published = Assessment(
        space,
        [
            oset(space, (3, -5, 0)),
            oset(space, (-6, 1, 1), (-2, 2, -8)),
        ],
    )
    assert len(report.output) <= len(published)
    assert report.output.total_options <= published.total_options

    rng = random.Random(2026)
    for _ in range(200):
        query = random_option_set(rng, space, max_size=3, lo=-10, hi=10)
        ours = is_in_extension(query, report.output).member
        theirs = is_in_extension(query, published).member
        assert ours == theirs

    result = choose(report.output, three_outcome.query)
    assert result.chosen == three_outcome.query_chosen
    ok("three-outcome end-to-end: 8 sets, equivalent reduction, exact choice")


def test_lp_kernel_against_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        space = random_space(rng, max_dim=4)
        n = rng.randint(1, 6)
        problem = FeasibilityProblem(
            tuple(random_vector(rng, space) for _ in range(n)),
            random_vector(rng, space),
        )
        certificate = is_feasible(problem)
        assert (certificate is not None) == fm_oracle(problem)
        if certificate is not None:
            assert verify_certificate(problem, certificate)
    ok("lp kernel: 1000/1000 oracle agreement, all certificates verify")


def _sampled_cases(seed: int):
    rng = random.Random(seed)
    while True:
        space = random_space(rng)
        yield rng, space


def test_coherence_k0_zero_stripping():
    gen = _sampled_cases(100)
    for _ in range(500):
        rng, space = next(gen)
        assessment = random_assessment(rng, space)
        query = random_option_set(rng, space)
        if rng.random() < 0.5:
            query = query.union(OptionSet(space, [space.zero()]))
        assert (
            is_in_extension(query, assessment).member
            == is_in_extension(query.remove_zero(), assessment).member
        )
    ok("coherence K0: zero-stripping (500 cases)")


def test_coherence_k2_positive_singletons():
    gen = _sampled_cases(101)
    for _ in range(500):
        rng, space = next(gen)
        assessment = random_assessment(rng, space)
        coords = [rng.randint(0, 5) for _ in range(space.dimension)]
        coords[rng.randrange(space.dimension)] = rng.randint(1, 5)
        vec = OptionVec(space, coords)
        result = is_in_extension(OptionSet(space, [vec]), assessment)
        assert result.member and result.positive_witness is not None
    ok("coherence K2: positive singletons always belong (500 cases)")


def test_coherence_k4_superset_monotonicity():
    gen = _sampled_cases(102)
    done = 0
    while done < 500:
        rng, space = next(gen)
        assessment = random_assessment(rng, space)
        small = random_option_set(rng, space)
        if rng.random() < 0.5:
            small = small.union(
                OptionSet(space, [OptionVec(space, [1] * space.dimension)])
            )
        if not is_in_extension(small, assessment).member:
            continue
        extra = random_option_set(rng, space)
        assert is_in_extension(small.union(extra), assessment).member
        done += 1
    ok("coherence K4: superset monotonicity (500 member cases)")


def test_coherence_k3_sampled_combinations():
    gen = _sampled_cases(103)
    done = 0
    while done < 500:
        rng, space = next(gen)
        assessment = random_assessment(rng, space, max_sets=3, max_size=2)
        sets = []
        for _ in range(2):
            candidate = random_option_set(rng, space, max_size=3, min_size=1)
            if rng.random() < 0.5:
                candidate = candidate.union(
                    OptionSet(space, [OptionVec(space, [1] * space.dimension)])
                )
            sets.append(candidate)
        first, second = sets
        if not is_in_extension(first, assessment).member:
            continue
        if not is_in_extension(second, assessment).member:
            continue
        combos = []
        for u in first:
            for v in second:
                w1, w2 = random_positive_weights(rng, 2)
                combos.append(u.scale(w1) + v.scale(w2))
        assert is_in_extension(OptionSet(space, combos), assessment).member
        done += 1
    ok("coherence K3: sampled pairwise combinations stay inside (500 cases)")


def test_coherence_c1_translation_invariance():
    gen = _sampled_cases(104)
    done = 0
    while done < 500:
        rng, space = next(gen)
        assessment = random_assessment(rng, space, max_sets=2, max_size=2)
        if not is_consistent(assessment).consistent:
            continue
        query = random_option_set(rng, space, max_size=3, min_size=1)
        shift = random_vector(rng, space)
        base = choose(assessment, query)
        moved = choose(assessment, query.translate(-shift))
        assert moved.chosen == base.chosen.translate(-shift)
        done += 1
    ok("coherence C1: choice is translation invariant (500 cases)")


def test_coherence_c4_rejection_monotonicity():
    gen = _sampled_cases(105)
    done = 0
    while done < 500:
        rng, space = next(gen)
        assessment = random_assessment(rng, space, max_sets=2, max_size=2)
        if not is_consistent(assessment).consistent:
            continue
        big = random_option_set(rng, space, max_size=3, min_size=1)
        kept = [el for el in big if rng.random() < 0.7]
        small = OptionSet(space, kept or [big.elements[0]])
        assert choose(assessment, small).rejected.issubset(
            choose(assessment, big).rejected
        )
        done += 1
    ok("coherence C4: rejections only grow with the menu (500 cases)")


def test_coherence_c0_nonempty_choice():
    gen = _sampled_cases(106)
    done = 0
    while done < 500:
        rng, space = next(gen)
        assessment = random_assessment(rng, space, max_sets=3, max_size=2)
        if not is_consistent(assessment).consistent:
            continue
        query = random_option_set(rng, space, max_size=3, min_size=1)
        assert len(choose(assessment, query).chosen) >= 1
        done += 1
    ok("coherence C0: consistent knowledge never empties a menu (500 cases)")


def test_simplify_equivalence_and_idempotence():
    gen = _sampled_cases(107)
    for _ in range(500):
        rng, space = next(gen)
        assessment = random_assessment(rng, space)
        report = simplify(assessment)
        query = random_option_set(rng, space)
        assert (
            is_in_extension(query, assessment).member
            == is_in_extension(query, report.output).member
        )
        again = simplify(report.output)
        assert again.steps == () and again.output == report.output
    ok("simplify: equivalence preserved and idempotent (500 cases)")


def test_two_option_bound_dimension_two():
    rng = random.Random(108)
    space = OutcomeSpace(["x0", "x1"])
    for _ in range(500):
        assessment = random_assessment(rng, space)
        report = simplify(assessment)
        assert all(len(s) <= 2 for s in report.output)
    ok("dimension-2 bound: every simplified set has at most two options (500 cases)")


# --- CLI / service parity ----------------------------------------------------

RUNNING_PROBLEM = {
    "outcomes": ["good", "bad"],
    "statements": [
        {
            "context": [["5", "-3"], ["3", "-2"], ["1", "-1"], ["-2", "1"]],
            "chosen": [["5", "-3"], ["3", "-2"]],
        },
        {"context": [["3", "1"], ["-4", "8"]], "chosen": [["-4", "8"]]},
    ],
    "queries": [[["-3", "4"], ["0", "1"], ["4", "-3"]]],
}


def _cli(capsys, tmp_path, *argv) -> str:
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(RUNNING_PROBLEM), encoding="utf-8")
    code = cli_main([*argv, "--input", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    return out


def test_cli_service_parity(tmp_path, capsys):
    app = create_app(session_dir=tmp_path / "sessions", budget=30.0)
    with TestClient(app) as client:
        sid = client.post(
            "/sessions", json={"outcomes": RUNNING_PROBLEM["outcomes"]}
        ).json()["id"]
        for statement in RUNNING_PROBLEM["statements"]:
            assert (
                client.post(f"/sessions/{sid}/statements", json=statement).status_code
                == 201
            )

        cli_derived = _cli(capsys, tmp_path, "derive")
        api_derived = client.get(f"/sessions/{sid}/assessment").json()
        assert canonical_dumps(api_derived) == cli_derived

        cli_report = _cli(capsys, tmp_path, "simplify", "--steps")
        api_report = client.get(
            f"/sessions/{sid}/assessment", params={"simplified": "true"}
        ).json()
        assert canonical_dumps(api_report) == cli_report

        cli_verdict = _cli(
            capsys, tmp_path, "consistent", "--simplify", "--witnesses"
        )
        word, _, cli_json = cli_verdict.partition("\n")
        assert word == "CONSISTENT"
        api_verdict = client.get(f"/sessions/{sid}/consistency").json()
        assert canonical_dumps(api_verdict) == cli_json

        cli_choice = _cli(capsys, tmp_path, "choose", "--simplify", "--witnesses")
        cli_query_result = json.loads(cli_choice)["queries"][0]
        api_choice = client.post(
            f"/sessions/{sid}/choose", json={"options": RUNNING_PROBLEM["queries"][0]}
        ).json()
        assert canonical_dumps(api_choice) == canonical_dumps(cli_query_result)
    ok("cli/service parity: canonical outputs are byte-identical")
