"""Paragraph- and problem-level parsing.

The entity context threads left to right through a paragraph: sentence
i+1 is interpreted in the output context of sentence i. A problem is
three paragraphs chained through one context (premise, then declarative
question constraints, then the candidate statements); the interrogative
itself contributes only the query mode.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .composer import Context, DerivationTrace, compose_sentence
from .lambda_core import TRUTH, Denotation
from .preprocess import split_sentences
from .solver import QueryMode
from .trees import SentenceParse

ParseFn = Callable[[str], SentenceParse]


class ModeUnrecognizedError(ValueError):
    def __init__(self, question: str):
        super().__init__(f"cannot classify question {question!r}")
        self.question = question


class SentenceComposeError(ValueError):
    def __init__(self, index: int, sentence: str, cause: Exception):
        super().__init__(f"sentence {index} ({sentence!r}): {cause}")
        self.index = index
        self.sentence = sentence
        self.cause = cause


class NonTruthChoiceError(ValueError):
    pass


@dataclass(frozen=True)
class Problem:
    premise: tuple[str, ...]
    question: str
    choices: tuple[str, ...]
    gold_index: int | None = None

    def __post_init__(self):
        if not self.choices:
            raise ValueError("a problem needs at least one choice")
        if self.gold_index is not None and not 0 <= self.gold_index < len(self.choices):
            raise ValueError("gold index out of range")


@dataclass
class ProblemDenotation:
    premise_forms: list[Denotation]
    extra_constraint_forms: list[Denotation]
    mode: QueryMode
    choice_forms: list[Denotation]
    entities: list[str]
    context: Context
    traces: list[DerivationTrace] = field(default_factory=list)


_MODE_PATTERNS = (
    (re.compile(r"\bmust\s+be\s+true\b", re.IGNORECASE), QueryMode.MUST_BE_TRUE),
    (
        re.compile(
            r"\bis\s+not\s+true\b|\bcannot\s+be\s+true\b|\bcould\s+not\s+be\s+true\b|\bmust\s+be\s+false\b",
            re.IGNORECASE,
        ),
        QueryMode.CANNOT_BE_TRUE,
    ),
    (
        re.compile(r"\bis\s+true\b|\bcould\s+be\s+true\b|\bmight\s+be\s+true\b", re.IGNORECASE),
        QueryMode.COULD_BE_TRUE,
    ),
)


def _is_interrogative(sentence: str) -> bool:
    if sentence.rstrip().endswith("?"):
        return True
    first = sentence.split(None, 1)[0].lower() if sentence.split() else ""
    return first in ("what", "which", "who")


def classify_question(text: str) -> tuple[QueryMode, list[str]]:
    """Split a question into its mode and any declarative constraint
    sentences that precede the interrogative."""
    sentences = split_sentences(text)
    declaratives: list[str] = []
    mode: QueryMode | None = None
    for sentence in sentences:
        if _is_interrogative(sentence):
            for pattern, found in _MODE_PATTERNS:
                if pattern.search(sentence):
                    mode = found
                    break
            if mode is None:
                raise ModeUnrecognizedError(sentence)
        else:
            declaratives.append(sentence)
    if mode is None:
        raise ModeUnrecognizedError(text)
    return mode, declaratives


def compose_paragraph(
    parses: list[SentenceParse],
    ctx: Context,
    start_index: int = 0,
) -> tuple[list[Denotation], Context, list[DerivationTrace]]:
    """Fold compose_sentence over the parses, threading the context."""
    forms: list[Denotation] = []
    traces: list[DerivationTrace] = []
    current = ctx
    for offset, parse in enumerate(parses):
        try:
            den, current, trace = compose_sentence(parse, current)
        except (ValueError, LookupError) as exc:
            raise SentenceComposeError(start_index + offset, parse.sentence, exc) from exc
        forms.append(den)
        traces.append(trace)
    return forms, current, traces


def compose_problem(
    problem: Problem,
    parse_fn: ParseFn,
    mode_override: QueryMode | None = None,
) -> ProblemDenotation:
    """Problem-level parsing; expects preprocessed (normalized) fields.

    The premise starts from the empty context; entity-introduction
    sentences contribute context entries but no constraint form.
    """
    premise_parses = [parse_fn(s) for s in problem.premise]
    premise_all, ctx_premise, traces = compose_paragraph(premise_parses, Context())
    premise_forms = [d for d in premise_all if d.semtype == TRUTH]

    mode, declaratives = classify_question(problem.question)
    if mode_override is not None:
        mode = mode_override
    extra_parses = [parse_fn(s) for s in declaratives]
    extra_all, ctx_question, extra_traces = compose_paragraph(
        extra_parses, ctx_premise, start_index=len(problem.premise)
    )
    extra_forms = [d for d in extra_all if d.semtype == TRUTH]
    traces.extend(extra_traces)

    choice_forms: list[Denotation] = []
    ctx_choices = ctx_question
    for i, choice in enumerate(problem.choices):
        parse = parse_fn(choice)
        forms, ctx_choices, choice_traces = compose_paragraph(
            [parse], ctx_choices, start_index=len(problem.premise) + len(declaratives) + i
        )
        if forms[0].semtype != TRUTH:
            raise NonTruthChoiceError(
                f"choice {i} composed to type {forms[0].semtype.text()}: {choice!r}"
            )
        choice_forms.append(forms[0])
        traces.extend(choice_traces)

    return ProblemDenotation(
        premise_forms=premise_forms,
        extra_constraint_forms=extra_forms,
        mode=mode,
        choice_forms=choice_forms,
        entities=ctx_choices.labels_by_mention(),
        context=ctx_choices,
        traces=traces,
    )
