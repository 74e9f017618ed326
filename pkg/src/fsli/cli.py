"""Command-line interface.

Exit codes: 0 success, 2 format error, 3 parse failures present,
4 verification mismatch. Setting FSLI_TRACE=1 is equivalent to --trace.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .composer import Context
from .discourse import compose_paragraph
from .harness import (
    FormatError,
    VerificationError,
    evaluate,
    load_problems,
    load_tree_index,
    preprocess_problem,
    solve,
)
from .harness import ParseFailureError
from .preprocess import bb_parse, normalize_phrases, split_sentences
from .solver import QueryMode

_MODES = {"could": QueryMode.COULD_BE_TRUE, "must": QueryMode.MUST_BE_TRUE, "cannot": QueryMode.CANNOT_BE_TRUE}


def _tracing(args) -> bool:
    return bool(getattr(args, "trace", False) or os.environ.get("FSLI_TRACE") == "1")


def _print_traces(traces, out) -> None:
    for trace in traces:
        print(trace.render(), file=out)


def _cmd_parse(args) -> int:
    path = Path(args.file)
    text = path.read_text(encoding="utf-8")
    if text.lstrip()[:1] == "{":
        problems = load_problems(path, args.format)
        for idx, problem in enumerate(problems):
            prepared = preprocess_problem(problem)
            parses = [bb_parse(s) for s in prepared.premise]
            forms, ctx, traces = compose_paragraph(parses, Context())
            print(f"# problem {idx}")
            for den in forms:
                print(f"  {den.text()}")
            print(f"  context: {ctx.as_dict()}")
            if _tracing(args):
                _print_traces(traces, sys.stdout)
    else:
        sentences = [normalize_phrases(s) for line in text.splitlines() for s in split_sentences(line)]
        parses = [bb_parse(s) for s in sentences]
        forms, ctx, traces = compose_paragraph(parses, Context())
        for den in forms:
            print(den.text())
        print(f"context: {ctx.as_dict()}")
        if _tracing(args):
            _print_traces(traces, sys.stdout)
    return 0


def _cmd_solve(args) -> int:
    problems = load_problems(args.file, args.format)
    trees = load_tree_index(args.trees) if args.trees else None
    mode = _MODES[args.mode] if args.mode else None
    failures = 0
    for idx, problem in enumerate(problems):
        try:
            answer = solve(problem, mode_override=mode, trees=trees, verify=args.verify)
        except ParseFailureError as exc:
            failures += 1
            print(f"problem {idx}: PARSE FAILURE ({exc.reason})")
            continue
        bits = "".join("1" if v else "0" for v in answer.per_choice)
        chosen = answer.chosen_index if answer.chosen_index is not None else "-"
        extra = " UNSAT" if answer.unsat_premises else ""
        print(f"problem {idx}: [{bits}] chosen={chosen} mode={answer.mode.value}{extra}")
        if _tracing(args):
            _print_traces(answer.traces, sys.stdout)
    return 3 if failures else 0


def _cmd_eval(args) -> int:
    problems = load_problems(args.file, args.format)
    trees = load_tree_index(args.trees) if args.trees else None
    report = evaluate(problems, trees=trees, verify=args.verify, jobs=args.jobs)
    payload = report.to_json()
    print(
        f"total={report.total} answered={report.answered} "
        f"correct={report.correct} accuracy={report.accuracy:.4f}"
    )
    for outcome in report.failures:
        print(f"  failure at {outcome.index}: {outcome.failure}")
    if args.report:
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return 3 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsli",
        description="Parse one-dimensional ordering word problems into logical forms and decide which candidate statements are deducible.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse premises and print denotations")
    p_parse.add_argument("file")
    p_parse.add_argument("--format", choices=["auto", "bigbench", "canonical"], default="auto")
    p_parse.add_argument("--trace", action="store_true")
    p_parse.set_defaults(fn=_cmd_parse)

    p_solve = sub.add_parser("solve", help="solve problems and print per-choice bits")
    p_solve.add_argument("file")
    p_solve.add_argument("--mode", choices=sorted(_MODES))
    p_solve.add_argument("--trees", help="annotated-tree JSONL with externally supplied parses")
    p_solve.add_argument("--verify", action="store_true", help="cross-check with the exhaustive oracle")
    p_solve.add_argument("--trace", action="store_true")
    p_solve.add_argument("--format", choices=["auto", "bigbench", "canonical"], default="auto")
    p_solve.set_defaults(fn=_cmd_solve)

    p_eval = sub.add_parser("eval", help="score a dataset and report accuracy")
    p_eval.add_argument("file")
    p_eval.add_argument("--format", choices=["auto", "bigbench", "canonical"], default="auto")
    p_eval.add_argument("--jobs", type=int, default=1)
    p_eval.add_argument("--report", help="write a JSON report to this path")
    p_eval.add_argument("--trees")
    p_eval.add_argument("--verify", action="store_true")
    p_eval.set_defaults(fn=_cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 4
    except ParseFailureError as exc:
        print(f"parse failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
