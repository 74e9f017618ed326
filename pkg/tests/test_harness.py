import json

import pytest

from conftest import BIRDS_EXAMPLE, RANKING_EXAMPLE
from fsli import cli
from fsli.discourse import Problem
from fsli.harness import (
    AmbiguousAnswerError,
    FormatError,
    LoweringError,
    ParseFailureError,
    evaluate,
    load_bigbench,
    load_canonical,
    load_problems,
    solve,
    term_to_constraints,
)
from fsli.lambda_core import And, EntityRef, Not, Pred
from fsli.solver import QueryMode
from fsli import solver


def ref(label):
    return EntityRef(label)


class TestLowering:
    def test_atoms(self):
        assert term_to_constraints(Pred("before", (ref("a"), ref("b")))) == [solver.Before("a", "b")]
        assert term_to_constraints(Pred("after", (ref("a"), ref("b")))) == [solver.Before("b", "a")]
        assert term_to_constraints(Pred("succeed", (ref("a"), ref("b")))) == [solver.Succeed("a", "b")]
        assert term_to_constraints(Pred("precede", (ref("a"), ref("b")))) == [solver.Succeed("b", "a")]
        assert term_to_constraints(Pred("first", (ref("a"),))) == [solver.First("a")]
        assert term_to_constraints(Pred("last", (ref("a"),))) == [solver.Last("a")]
        assert term_to_constraints(
            Pred("position", (ref("a"), Pred("last"), Pred("2")))
        ) == [solver.Position("a", "last", 2)]

    def test_negation_and_conjunction(self):
        assert term_to_constraints(Not(Pred("first", (ref("a"),)))) == [solver.Not(solver.First("a"))]
        both = And(Pred("first", (ref("a"),)), Pred("last", (ref("b"),)))
        assert term_to_constraints(both) == [solver.First("a"), solver.Last("b")]

    def test_unlowerable(self):
        with pytest.raises(LoweringError):
            term_to_constraints(Pred("taller", (ref("a"), ref("b"))))


class TestSolve:
    def test_bb_example(self):
        answer = solve(BIRDS_EXAMPLE, verify=True)
        assert answer.per_choice == [False, False, True]
        assert answer.chosen_index == 2
        assert not answer.unsat_premises
        assert list(answer.model.entities) == ["r", "q", "c"]
        assert [c.text() for c in answer.model.constraints] == [
            "position(q,first,1)",
            "last(r)",
        ]

    def test_program_ranking_example(self):
        answer = solve(RANKING_EXAMPLE, verify=True)
        assert answer.per_choice[1] is True
        assert answer.chosen_index == 1

    def test_contradictory_premises_flagged(self):
        problem = Problem(
            ("There are two trains: a steamer and a diesel. "
             "The steamer is before the diesel. The diesel is before the steamer.",),
            "What is true?",
            ("The steamer is first.",),
            0,
        )
        answer = solve(problem)
        assert answer.unsat_premises
        assert answer.per_choice == [False]

    def test_parse_failure_raises(self):
        problem = Problem(("zzz qqq.",), "What is true?", ("A is first.",), 0)
        with pytest.raises(ParseFailureError):
            solve(problem)

    def test_choice_with_unknown_entity_is_parse_failure(self):
        problem = Problem(
            ("There are two trains: a steamer and a diesel.",),
            "What is true?",
            ("The caboose is first.",),
            0,
        )
        with pytest.raises(ParseFailureError, match="caboose"):
            solve(problem)

    def test_strict_unique_ambiguity(self):
        problem = Problem(
            ("There are two trains: a steamer and a diesel.",),
            "What is true?",
            ("The steamer is first.", "The diesel is first."),
            0,
        )
        with pytest.raises(AmbiguousAnswerError):
            solve(problem, strict_unique=True)

    def test_mode_override(self):
        problem = Problem(
            ("There are two trains: a steamer and a diesel.",),
            "What is true?",
            ("The steamer is first.",),
            0,
        )
        could = solve(problem)
        must = solve(problem, mode_override=QueryMode.MUST_BE_TRUE)
        assert could.per_choice == [True]
        assert must.per_choice == [False]


class TestLoaders:
    def test_bigbench_sizes(self, bb_task_dir):
        assert len(load_bigbench(bb_task_dir / "task_3_objects.json")) == 300
        assert len(load_bigbench(bb_task_dir / "task_5_objects.json")) == 500
        assert len(load_bigbench(bb_task_dir / "task_7_objects.json")) == 700

    def test_bigbench_drops_preamble_and_recovers_gold(self, bb_task_dir):
        problems = load_bigbench(bb_task_dir / "task_3_objects.json")
        first = problems[0]
        assert "fixed order" not in " ".join(first.premise)
        assert first.question == "What is true?"
        assert first.gold_index is not None

    def test_empty_file_is_format_error(self, tmp_path):
        empty = tmp_path / "empty.json"
        empty.write_text("")
        with pytest.raises(FormatError):
            load_bigbench(empty)
        with pytest.raises(FormatError):
            load_canonical(empty)

    def test_bad_schema_is_format_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"examples": [{"input": "x"}]}))
        with pytest.raises(FormatError):
            load_bigbench(bad)

    def test_canonical_round(self, tmp_path):
        path = tmp_path / "probs.jsonl"
        rows = [
            {"premise": ["A is before B."], "question": "What is true?",
             "choices": ["A is first."], "label": 0},
        ]
        path.write_text("\n".join(json.dumps(r) for r in rows))
        problems = load_canonical(path)
        assert problems[0].gold_index == 0
        assert load_problems(path)[0] == problems[0]

    def test_format_autodetect_bigbench(self, bb_task_dir):
        assert len(load_problems(bb_task_dir / "task_3_objects.json")) == 300


class TestEvaluate:
    def test_parse_failures_scored_incorrect_and_listed(self):
        problems = [
            Problem(("There are two trains: a steamer and a diesel. The steamer is first.",),
                    "What is true?", ("The steamer is first.", "The diesel is first."), 0),
            Problem(("unparseable gibberish sentence.",), "What is true?", ("A is first.",), 0),
        ]
        report = evaluate(problems)
        assert report.total == 2
        assert report.correct == 1
        assert len(report.failures) == 1
        assert report.failures[0].index == 1
        assert "gibberish" in report.failures[0].failure

    def test_reports_are_deterministic(self, bb_task_dir):
        problems = load_bigbench(bb_task_dir / "task_3_objects.json")[:40]
        r1 = evaluate(problems, jobs=1)
        r2 = evaluate(problems, jobs=4)
        assert json.dumps(r1.to_json()) == json.dumps(r2.to_json())
        assert r1.outcomes == r2.outcomes

    def test_empty_dataset(self):
        report = evaluate([])
        assert report.total == 0
        assert report.accuracy == 0.0


class TestCli:
    def test_eval_exit_zero_and_report(self, bb_task_dir, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        code = cli.main(
            ["eval", str(bb_task_dir / "task_3_objects.json"), "--report", str(report_path)]
        )
        assert code == 0
        payload = json.loads(report_path.read_text())
        assert set(payload) == {"total", "correct", "accuracy", "failures"}
        assert payload["accuracy"] == 1.0
        out = capsys.readouterr().out
        assert "accuracy=1.0000" in out

    def test_eval_exit_two_on_format_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        assert cli.main(["eval", str(bad)]) == 2

    def test_solve_exit_three_on_parse_failure(self, tmp_path, capsys):
        path = tmp_path / "probs.jsonl"
        path.write_text(json.dumps({
            "premise": ["total nonsense here."],
            "question": "What is true?",
            "choices": ["A is first."],
            "label": 0,
        }))
        assert cli.main(["solve", str(path)]) == 3

    def test_solve_prints_bits(self, tmp_path, capsys):
        path = tmp_path / "probs.jsonl"
        path.write_text(json.dumps({
            "premise": ["There are two trains: a steamer and a diesel.",
                        "The steamer is before the diesel."],
            "question": "What is true?",
            "choices": ["The steamer is first.", "The diesel is first."],
            "label": 0,
        }))
        assert cli.main(["solve", str(path), "--verify"]) == 0
        out = capsys.readouterr().out
        assert "[10] chosen=0" in out

    def test_parse_text_with_trace_env(self, tmp_path, capsys, monkeypatch):
        path = tmp_path / "para.txt"
        path.write_text("A pink monkey is eating an apple.\nThe apple is tasty.\n")
        monkeypatch.setenv("FSLI_TRACE", "1")
        assert cli.main(["parse", str(path)]) == 0
        out = capsys.readouterr().out
        assert "eat(p, a) : t" in out
        assert "PM ::" in out

    def test_eval_exit_four_on_verification_mismatch(self, tmp_path, capsys, monkeypatch):
        from fsli.harness import VerificationError

        def broken(*args, **kwargs):
            raise VerificationError("forced mismatch")

        monkeypatch.setattr(cli, "evaluate", broken)
        path = tmp_path / "probs.jsonl"
        path.write_text(json.dumps({
            "premise": ["There are two trains: a steamer and a diesel."],
            "question": "What is true?",
            "choices": ["The steamer is first."],
            "label": 0,
        }))
        assert cli.main(["eval", str(path), "--verify"]) == 4

    def test_solve_with_external_trees(self, tmp_path, capsys):
        from fsli.preprocess import bb_parse, normalize_phrases
        from fsli.trees import write_annotated_trees

        sentences = [
            "There are two trains: a steamer and a diesel.",
            "The steamer is before the diesel.",
            "The steamer is first.",
            "The diesel is first.",
        ]
        normalized = [normalize_phrases(s) for s in sentences]
        trees_path = tmp_path / "trees.jsonl"
        trees_path.write_text(write_annotated_trees([bb_parse(s) for s in normalized]))
        probs_path = tmp_path / "probs.jsonl"
        probs_path.write_text(json.dumps({
            "premise": sentences[:2],
            "question": "What is true?",
            "choices": sentences[2:],
            "label": 0,
        }))
        assert cli.main(["solve", str(probs_path), "--trees", str(trees_path)]) == 0
        assert "[10] chosen=0" in capsys.readouterr().out

    def test_solve_with_missing_tree_is_parse_failure(self, tmp_path, capsys):
        from fsli.preprocess import bb_parse
        from fsli.trees import write_annotated_trees

        trees_path = tmp_path / "trees.jsonl"
        trees_path.write_text(write_annotated_trees([bb_parse("The steamer is first.")]))
        probs_path = tmp_path / "probs.jsonl"
        probs_path.write_text(json.dumps({
            "premise": ["There are two trains: a steamer and a diesel."],
            "question": "What is true?",
            "choices": ["The steamer is first."],
            "label": 0,
        }))
        assert cli.main(["solve", str(probs_path), "--trees", str(trees_path)]) == 3
