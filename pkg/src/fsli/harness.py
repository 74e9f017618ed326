"""End-to-end problem solving and dataset evaluation.

Dataflow per problem: normalize text -> parse (pattern grammar or
externally supplied trees) -> compose premise/question/choices -> lower
the truth-typed forms to ordering constraints -> decide each candidate
against the valid orderings -> pick the unique deducible choice.
"""

from __future__ import annotations

import json
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import solver
from .composer import DerivationTrace
from .discourse import Problem, ProblemDenotation, compose_problem
from .lambda_core import And, EntityRef, Not, Pred, Term, term_text
from .preprocess import (
    bb_parse,
    normalize_phrases,
    rewrite_conditionals,
    split_sentences,
)
from .solver import OrderModel, QueryMode
from .trees import SentenceParse, read_annotated_tree


class FormatError(ValueError):
    pass


class ParseFailureError(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class AmbiguousAnswerError(ValueError):
    pass


class VerificationError(AssertionError):
    pass


class LoweringError(ValueError):
    pass


# ---------------------------------------------------------------------------
# logical form -> constraints


def _entity_label(term: Term) -> str:
    if isinstance(term, EntityRef):
        return term.label
    raise LoweringError(f"expected an entity label, got {term_text(term)}")


def _atom_name(term: Term) -> str:
    if isinstance(term, Pred) and not term.args:
        return term.name
    raise LoweringError(f"expected a symbolic atom, got {term_text(term)}")


def term_to_constraints(term: Term) -> list[solver.Constraint]:
    """Lower a truth-typed logical form onto the solver's atom inventory."""
    if isinstance(term, And):
        return term_to_constraints(term.left) + term_to_constraints(term.right)
    if isinstance(term, Not):
        inner = term_to_constraints(term.inner)
        if len(inner) != 1:
            raise LoweringError(f"negation over a non-atomic form: {term_text(term)}")
        return [solver.Not(inner[0])]
    if isinstance(term, Pred):
        name, args = term.name, term.args
        if name == "before" and len(args) == 2:
            return [solver.Before(_entity_label(args[0]), _entity_label(args[1]))]
        if name == "after" and len(args) == 2:
            return [solver.Before(_entity_label(args[1]), _entity_label(args[0]))]
        if name == "succeed" and len(args) == 2:
            return [solver.Succeed(_entity_label(args[0]), _entity_label(args[1]))]
        if name == "precede" and len(args) == 2:
            # a immediately before b: b fills the slot right after a
            return [solver.Succeed(_entity_label(args[1]), _entity_label(args[0]))]
        if name == "first" and len(args) == 1:
            return [solver.First(_entity_label(args[0]))]
        if name == "last" and len(args) == 1:
            return [solver.Last(_entity_label(args[0]))]
        if name == "position" and len(args) == 3:
            anchor = _atom_name(args[1])
            try:
                k = int(_atom_name(args[2]))
            except ValueError as exc:
                raise LoweringError(f"bad position index in {term_text(term)}") from exc
            return [solver.Position(_entity_label(args[0]), anchor, k)]
    raise LoweringError(f"no constraint lowering for {term_text(term)}")


# ---------------------------------------------------------------------------
# answers and reports


@dataclass
class Answer:
    per_choice: list[bool]
    chosen_index: int | None
    unsat_premises: bool
    mode: QueryMode
    model: OrderModel
    denotation: ProblemDenotation
    traces: list[DerivationTrace] = field(default_factory=list)


@dataclass(frozen=True)
class ProblemOutcome:
    index: int
    chosen_index: int | None
    gold_index: int | None
    correct: bool
    failure: str | None = None
    unsat_premises: bool = False


@dataclass
class EvalReport:
    total: int
    answered: int
    correct: int
    outcomes: list[ProblemOutcome]

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0

    @property
    def failures(self) -> list[ProblemOutcome]:
        return [o for o in self.outcomes if o.failure is not None]

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "correct": self.correct,
            "accuracy": self.accuracy,
            "failures": [{"index": o.index, "reason": o.failure} for o in self.failures],
        }


# ---------------------------------------------------------------------------
# loading


_PREAMBLE_MARKERS = (
    "the following paragraphs each describe",
    "the statements are logically consistent",
)


def _looks_like_preamble(sentence: str) -> bool:
    low = sentence.lower()
    return any(low.startswith(marker) for marker in _PREAMBLE_MARKERS)


def load_bigbench(path: str | Path) -> list[Problem]:
    """Read a published-format task file: {"examples": [{"input", "target_scores"}]}."""
    raw = Path(path).read_text(encoding="utf-8").strip()
    if not raw:
        raise FormatError(f"{path}: empty file")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg})") from exc
    examples = data.get("examples") if isinstance(data, dict) else None
    if not isinstance(examples, list) or not examples:
        raise FormatError(f"{path}: missing nonempty 'examples' list")
    problems: list[Problem] = []
    for i, ex in enumerate(examples):
        if not isinstance(ex, dict) or "input" not in ex or "target_scores" not in ex:
            raise FormatError(f"{path}: example {i} needs 'input' and 'target_scores'")
        sentences = [s for s in split_sentences(ex["input"]) if not _looks_like_preamble(s)]
        question = "What is true?"
        if sentences and sentences[-1].rstrip().endswith("?"):
            question = sentences.pop()
        scores = ex["target_scores"]
        if not isinstance(scores, dict) or not scores:
            raise FormatError(f"{path}: example {i} has no target scores")
        choices = tuple(scores.keys())
        best = max(scores.values())
        gold = next(j for j, c in enumerate(choices) if scores[c] == best)
        problems.append(Problem(tuple(sentences), question, choices, gold))
    return problems


def load_canonical(path: str | Path) -> list[Problem]:
    """Read problem JSONL: {"premise": [str], "question": str, "choices": [str], "label": int?}."""
    problems: list[Problem] = []
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise FormatError(f"{path}: empty file")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
        try:
            premise = obj["premise"]
            question = obj["question"]
            choices = obj["choices"]
        except (TypeError, KeyError) as exc:
            raise FormatError(f"{path}:{lineno}: missing field {exc}") from exc
        if not isinstance(premise, list) or not isinstance(choices, list):
            raise FormatError(f"{path}:{lineno}: premise and choices must be lists")
        problems.append(
            Problem(tuple(premise), question, tuple(choices), obj.get("label"))
        )
    return problems


def load_problems(path: str | Path, fmt: str = "auto") -> list[Problem]:
    if fmt == "bigbench":
        return load_bigbench(path)
    if fmt == "canonical":
        return load_canonical(path)
    head = Path(path).read_text(encoding="utf-8").lstrip()[:1]
    if head == "{":
        first_line = Path(path).read_text(encoding="utf-8").strip().splitlines()[0]
        try:
            obj = json.loads(first_line)
            if isinstance(obj, dict) and "premise" in obj:
                return load_canonical(path)
        except json.JSONDecodeError:
            pass
        return load_bigbench(path)
    raise FormatError(f"{path}: cannot detect format")


def load_tree_index(path: str | Path) -> dict[str, SentenceParse]:
    """Index an annotated-tree JSONL file by sentence text, binarized."""
    parses = read_annotated_tree(Path(path).read_text(encoding="utf-8"))
    return {p.sentence: p.binarized() for p in parses}


# ---------------------------------------------------------------------------
# solving


def preprocess_problem(problem: Problem) -> Problem:
    premise: list[str] = []
    for chunk in problem.premise:
        premise.extend(normalize_phrases(s) for s in split_sentences(chunk))
    question_sentences = split_sentences(rewrite_conditionals(problem.question))
    question = " ".join(
        s if s.rstrip().endswith("?") else normalize_phrases(s) for s in question_sentences
    )
    choices = tuple(normalize_phrases(c) for c in problem.choices)
    return Problem(tuple(premise), question, choices, problem.gold_index)


def _tree_parse_fn(index: dict[str, SentenceParse]):
    def parse(sentence: str) -> SentenceParse:
        hit = index.get(sentence)
        if hit is None:
            raise ParseFailureError(f"no annotated tree supplied for {sentence!r}")
        return hit

    return parse


def build_model(pd: ProblemDenotation) -> OrderModel:
    constraints: list[solver.Constraint] = []
    for den in pd.premise_forms + pd.extra_constraint_forms:
        constraints.extend(term_to_constraints(den.term))
    return OrderModel(tuple(pd.entities), tuple(constraints))


def solve(
    problem: Problem,
    mode_override: QueryMode | None = None,
    trees: dict[str, SentenceParse] | None = None,
    verify: bool = False,
    strict_unique: bool = False,
) -> Answer:
    """Solve one problem end to end.

    Raises ParseFailureError when any sentence cannot be parsed or
    composed; with ``verify`` the pruned solver is cross-checked against
    the exhaustive oracle.
    """
    prepared = preprocess_problem(problem)
    parse_fn = _tree_parse_fn(trees) if trees is not None else bb_parse
    try:
        pd = compose_problem(prepared, parse_fn, mode_override=mode_override)
        model = build_model(pd)
    except ParseFailureError:
        raise
    except (ValueError, LookupError) as exc:
        raise ParseFailureError(str(exc)) from exc

    valid = solver.valid_orderings(model)
    if verify:
        oracle = solver.brute_force_orderings(model)
        if oracle != valid:
            raise VerificationError(
                f"solver/oracle mismatch: {len(valid)} vs {len(oracle)} orderings"
            )
    unsat = not valid
    per_choice: list[bool] = []
    for den in pd.choice_forms:
        lowered = term_to_constraints(den.term)
        query = lowered[0] if len(lowered) == 1 else None
        if query is None:
            raise ParseFailureError(f"choice lowers to {len(lowered)} atoms, expected 1")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", solver.UnsatisfiableModelWarning)
            per_choice.append(solver.eval_query(model, query, pd.mode, valid))
    if verify:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", solver.UnsatisfiableModelWarning)
            oracle_choice = [
                solver.eval_query(model, term_to_constraints(d.term)[0], pd.mode, oracle)
                for d in pd.choice_forms
            ]
        if oracle_choice != per_choice:
            raise VerificationError("per-choice answers diverge from the oracle")

    true_indexes = [i for i, v in enumerate(per_choice) if v]
    chosen = true_indexes[0] if len(true_indexes) == 1 else None
    if strict_unique and len(true_indexes) != 1:
        raise AmbiguousAnswerError(
            f"{len(true_indexes)} choices are deducible, expected exactly 1"
        )
    return Answer(
        per_choice=per_choice,
        chosen_index=chosen,
        unsat_premises=unsat,
        mode=pd.mode,
        model=model,
        denotation=pd,
        traces=pd.traces,
    )


def evaluate(
    problems: list[Problem],
    mode_override: QueryMode | None = None,
    trees: dict[str, SentenceParse] | None = None,
    verify: bool = False,
    jobs: int = 1,
) -> EvalReport:
    """Score every problem; parse failures count as incorrect and are listed."""

    def run(indexed: tuple[int, Problem]) -> ProblemOutcome:
        i, problem = indexed
        try:
            answer = solve(problem, mode_override=mode_override, trees=trees, verify=verify)
        except ParseFailureError as exc:
            return ProblemOutcome(i, None, problem.gold_index, False, failure=exc.reason)
        correct = (
            answer.chosen_index is not None and answer.chosen_index == problem.gold_index
        )
        return ProblemOutcome(
            i, answer.chosen_index, problem.gold_index, correct,
            unsat_premises=answer.unsat_premises,
        )

    work = list(enumerate(problems))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run, work))
    else:
        outcomes = [run(item) for item in work]
    answered = sum(1 for o in outcomes if o.chosen_index is not None)
    correct = sum(1 for o in outcomes if o.correct)
    return EvalReport(len(problems), answered, correct, outcomes)
