import json

import pytest

from choicekit.cli import main

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

DERIVED = [[["-7", "7"]], [["2", "-1"], ["4", "-2"]], [["5", "-3"], ["7", "-4"]]]
REDUCED = [[["-7", "7"]], [["7", "-4"]]]


@pytest.fixture
def problem_file(tmp_path):
    def write(doc, name="problem.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_derive(problem_file, capsys):
    code, out, _ = run(capsys, "derive", "--input", problem_file(RUNNING_PROBLEM))
    assert code == 0
    assert json.loads(out) == {"assessment": DERIVED}


def test_derive_without_rejections_is_empty(problem_file, capsys):
    doc = {
        "outcomes": ["good", "bad"],
        "statements": [{"context": [["1", "2"]], "chosen": [["1", "2"]]}],
    }
    code, out, _ = run(capsys, "derive", "--input", problem_file(doc))
    assert code == 0
    assert json.loads(out) == {"assessment": []}


def test_malformed_fraction_is_validation_error(problem_file, capsys):
    doc = {"outcomes": ["good", "bad"], "assessment": [[["1/0", "2"]]]}
    code, _, err = run(capsys, "consistent", "--input", problem_file(doc))
    assert code == 2
    assert "1/0" in err


def test_derive_needs_statements(problem_file, capsys):
    doc = {"outcomes": ["good", "bad"], "assessment": DERIVED}
    code, _, err = run(capsys, "derive", "--input", problem_file(doc))
    assert code == 2
    assert "statements" in err


def test_simplify_with_steps(problem_file, capsys):
    code, out, _ = run(
        capsys, "simplify", "--steps", "--input", problem_file(RUNNING_PROBLEM)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["input"] == DERIVED
    assert doc["output"] == REDUCED
    rules = [step["rule"] for step in doc["steps"]]
    assert rules.count("remove-dominated-option") == 2
    assert rules.count("remove-redundant-set") == 1
    mus = {step.get("mu") for step in doc["steps"] if "mu" in step}
    assert mus == {"2", "5/7"}


def test_simplify_without_steps(problem_file, capsys):
    code, out, _ = run(capsys, "simplify", "--input", problem_file(RUNNING_PROBLEM))
    assert code == 0
    assert "steps" not in json.loads(out)


def test_consistent_verdicts(problem_file, capsys):
    code, out, _ = run(capsys, "consistent", "--input", problem_file(RUNNING_PROBLEM))
    assert code == 0
    verdict, _, rest = out.partition("\n")
    assert verdict == "CONSISTENT"
    doc = json.loads(rest)
    assert doc["consistent"] is True
    counterexample = doc["probe"]["counterexample"]
    assert sorted(map(tuple, counterexample)) == [
        ("-7", "7"),
        ("2", "-1"),
        ("5", "-3"),
    ]

    zero_doc = {"outcomes": ["good", "bad"], "assessment": [[["0", "0"]]]}
    code, out, _ = run(capsys, "consistent", "--input", problem_file(zero_doc))
    assert code == 1
    assert out.startswith("INCONSISTENT")


def test_choose_running_query(problem_file, capsys):
    code, out, _ = run(capsys, "choose", "--input", problem_file(RUNNING_PROBLEM))
    assert code == 0
    doc = json.loads(out)
    (result,) = doc["queries"]
    assert result["chosen"] == [["-3", "4"]]
    assert result["rejected"] == [["0", "1"], ["4", "-3"]]
    assert "rejections" not in result


def test_choose_with_witnesses(problem_file, capsys):
    code, out, _ = run(
        capsys, "choose", "--witnesses", "--input", problem_file(RUNNING_PROBLEM)
    )
    assert code == 0
    (result,) = json.loads(out)["queries"]
    assert {r["option"][0] for r in result["rejections"]} == {"0", "4"}


def test_choose_simplify_flag_keeps_partition(problem_file, capsys):
    path = problem_file(RUNNING_PROBLEM)
    _, plain, _ = run(capsys, "choose", "--input", path)
    _, pre, _ = run(capsys, "choose", "--simplify", "--input", path)
    plain_doc = json.loads(plain)["queries"][0]
    pre_doc = json.loads(pre)["queries"][0]
    assert plain_doc["chosen"] == pre_doc["chosen"]
    assert plain_doc["rejected"] == pre_doc["rejected"]


def test_choose_requires_queries(problem_file, capsys):
    doc = dict(RUNNING_PROBLEM)
    doc.pop("queries")
    code, _, err = run(capsys, "choose", "--input", problem_file(doc))
    assert code == 2
    assert "queries" in err


def test_choose_inconsistent_exit(problem_file, capsys):
    doc = {
        "outcomes": ["good", "bad"],
        "assessment": [[["0", "0"]]],
        "queries": [[["1", "1"]]],
    }
    code, _, err = run(capsys, "choose", "--input", problem_file(doc))
    assert code == 1
    assert "INCONSISTENT" in err


def test_choose_singleton_query_is_kept(problem_file, capsys):
    doc = dict(RUNNING_PROBLEM)
    doc["queries"] = [[["-9", "-9"]]]
    code, out, _ = run(capsys, "choose", "--input", problem_file(doc))
    assert code == 0
    assert json.loads(out)["queries"][0]["chosen"] == [["-9", "-9"]]


def test_member_exit_codes(problem_file, capsys):
    member_doc = dict(RUNNING_PROBLEM)
    member_doc["queries"] = [[["-7", "7"], ["-4", "4"]]]
    code, out, _ = run(capsys, "member", "--input", problem_file(member_doc))
    assert code == 0
    assert json.loads(out)["queries"][0]["member"] is True

    nonmember_doc = dict(RUNNING_PROBLEM)
    nonmember_doc["queries"] = [[]]
    code, out, _ = run(capsys, "member", "--input", problem_file(nonmember_doc))
    assert code == 1
    assert json.loads(out)["queries"][0]["member"] is False


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(RUNNING_PROBLEM)))
    code, out, _ = run(capsys, "derive")
    assert code == 0
    assert json.loads(out)["assessment"] == DERIVED


def test_missing_file_is_validation_error(capsys):
    code, _, err = run(capsys, "derive", "--input", "/nonexistent/problem.json")
    assert code == 2
    assert "error" in err


def test_output_is_stable_across_runs(problem_file, capsys):
    path = problem_file(RUNNING_PROBLEM)
    _, first, _ = run(capsys, "simplify", "--steps", "--input", path)
    _, second, _ = run(capsys, "simplify", "--steps", "--input", path)
    assert first == second
