"""Sentence-level semantic composition over binarized parse trees.

Nodes combine bottom-up, right child first, by terminal lookup (TN),
non-branching passthrough (NN), function application (FA), predicate
modification (PM), and an entity-list merge (LM) for coordination.
Articles and proper nouns execute against the entity context as they
compose, so the context grows while the tree is walked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lambda_core import (
    ENTITY,
    PREDICATE,
    TRUTH,
    Abs,
    And,
    App,
    Builtin,
    Denotation,
    EntityRef,
    Fun,
    ListOf,
    NameSupply,
    Pred,
    Term,
    Var,
    beta_reduce,
    predicate_modify,
    result_type,
    term_text,
    type_compatible,
)
from .lexicon import DEFAULT_LEXICON, Lexicon
from .trees import Leaf, ParseTree, SentenceParse, leaves


class CompositionError(ValueError):
    def __init__(self, label: str, left: str, right: str):
        super().__init__(
            f"no composition rule applies at node {label!r} "
            f"(left: {left}, right: {right})"
        )


class UnknownEntityError(LookupError):
    def __init__(self, description: str):
        super().__init__(f"no entity in context matching {description!r}")
        self.description = description


class NonTruthRootError(ValueError):
    pass


def description_key(term: Term) -> tuple[str, ...]:
    """Order-insensitive key over the predicate lemmas of a description."""
    names: list[str] = []

    def walk(t: Term) -> None:
        if isinstance(t, Pred) and t.args:
            names.append(t.name)
        if isinstance(t, And):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, Abs):
            walk(t.body)
        elif isinstance(t, App):
            walk(t.fun)
            walk(t.arg)

    walk(term)
    return tuple(sorted(names))


def _leading_predicate(term: Term) -> str:
    """Leftmost predicate lemma of a description, used to mint labels."""

    def walk(t: Term) -> str | None:
        if isinstance(t, Pred) and t.args:
            return t.name
        if isinstance(t, And):
            return walk(t.left) or walk(t.right)
        if isinstance(t, Abs):
            return walk(t.body)
        if isinstance(t, App):
            return walk(t.fun) or walk(t.arg)
        return None

    name = walk(term)
    if not name:
        raise UnknownEntityError(term_text(term))
    return name


@dataclass(frozen=True)
class ContextEntry:
    label: str
    description: Term            # saturated over the label, e.g. pink(p) and monkey(p)
    key: tuple[str, ...]
    mention: tuple[int, int]     # (sentence number, token start) of first mention


class Context:
    """Bidirectional entity registry: label <-> description key.

    Entries are never removed or relabeled; identical descriptions always
    resolve to the same label (novelty and familiarity conditions).
    """

    def __init__(self):
        self._entries: dict[str, ContextEntry] = {}
        self._by_key: dict[tuple[str, ...], str] = {}
        self._sentence_no = 0

    def copy(self) -> "Context":
        other = Context()
        other._entries = dict(self._entries)
        other._by_key = dict(self._by_key)
        other._sentence_no = self._sentence_no
        return other

    def begin_sentence(self) -> int:
        self._sentence_no += 1
        return self._sentence_no

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, label: str) -> bool:
        return label in self._entries

    def entries(self) -> list[ContextEntry]:
        return list(self._entries.values())

    def labels_by_mention(self) -> list[str]:
        return [e.label for e in sorted(self._entries.values(), key=lambda e: e.mention)]

    def describe(self, label: str) -> Term:
        return self._entries[label].description

    def as_dict(self) -> dict[str, str]:
        return {e.label: term_text(e.description) for e in self._entries.values()}

    def _mint_label(self, base_char: str) -> str:
        if base_char not in self._entries:
            return base_char
        n = 1
        while f"{base_char}{n}" in self._entries:
            n += 1
        return f"{base_char}{n}"

    def create(self, description_fun: Term, mention: tuple[int, int]) -> str:
        """createEntity: reuse the label for a known description, else mint."""
        key = description_key(description_fun)
        if key in self._by_key:
            return self._by_key[key]
        label = self._mint_label(_leading_predicate(description_fun)[0])
        saturated = beta_reduce(App(description_fun, EntityRef(label)))
        self._entries[label] = ContextEntry(label, saturated, key, mention)
        self._by_key[key] = label
        return label

    def lookup(self, description_fun: Term) -> str:
        """getEntity: exact description key, else unique superset match."""
        key = description_key(description_fun)
        hit = self._by_key.get(key)
        if hit is not None:
            return hit
        want = set(key)
        candidates = [e.label for e in self._entries.values() if want <= set(e.key)]
        if len(candidates) == 1:
            return candidates[0]
        raise UnknownEntityError(term_text(description_fun))


@dataclass(frozen=True)
class TraceStep:
    span: tuple[int, int]        # token index range, [start, end)
    rule: str                    # TN | NN | FA | PM | LM
    denotation: Denotation | None
    context: dict[str, str]

    def line(self) -> str:
        if self.denotation is None:
            body = "-"
        else:
            body = self.denotation.text()
        return f"{self.span[0]}:{self.span[1]} {self.rule} :: {body}"


@dataclass
class DerivationTrace:
    sentence: str
    steps: list[TraceStep] = field(default_factory=list)

    def render(self) -> str:
        spans = {step.span for step in self.steps}
        lines = [f"# {self.sentence}"]
        for step in self.steps:
            depth = sum(
                1
                for other in spans
                if other != step.span
                and other[0] <= step.span[0]
                and step.span[1] <= other[1]
            )
            lines.append("  " * depth + step.line())
        return "\n".join(lines)


_VACUOUS = object()  # conjunction/punctuation leaves contribute nothing


@dataclass
class _Walk:
    ctx: Context
    sentence_no: int
    lexicon: Lexicon
    supply: NameSupply
    trace: DerivationTrace

    def record(self, span, rule, den):
        self.trace.steps.append(
            TraceStep(span, rule, den if den is not _VACUOUS else None, self.ctx.as_dict())
        )


def _is_entity_like(den: Denotation) -> bool:
    return den.semtype == ENTITY and isinstance(den.term, (EntityRef, ListOf))


def _flatten_entities(term: Term) -> tuple[Term, ...]:
    if isinstance(term, ListOf):
        return term.items
    return (term,)


def _execute_builtin(fun: Denotation, arg: Denotation, walk: _Walk, span) -> Denotation:
    builtin = fun.term
    assert isinstance(builtin, Builtin)
    description = arg.term
    if builtin.payload is not None:
        # a modified proper noun: conjoin its own description with the argument's
        x = walk.supply.fresh("x")
        description = Abs(
            x,
            And(
                beta_reduce(App(builtin.payload, Var(x))),
                beta_reduce(App(arg.term, Var(x))),
            ),
        )
    if builtin.kind == "createEntity":
        label = walk.ctx.create(description, (walk.sentence_no, span[0]))
    else:
        label = walk.ctx.lookup(description)
    return Denotation(EntityRef(label), ENTITY)


def _apply(fun: Denotation, arg: Denotation, walk: _Walk, span) -> Denotation:
    if isinstance(fun.term, Builtin) and fun.term.kind in ("createEntity", "getEntity"):
        return _execute_builtin(fun, arg, walk, span)
    term = beta_reduce(App(fun.term, arg.term))
    assert isinstance(fun.semtype, Fun)
    return Denotation(term, result_type(fun.semtype, arg.semtype))


def _predicate_modify(left: Denotation, right: Denotation, walk: _Walk) -> Denotation:
    return predicate_modify(left, right, walk.supply)


def _compose_node(tree: ParseTree, start: int, walk: _Walk):
    """Returns (denotation-or-vacuous, span). Right child first."""
    if isinstance(tree, Leaf):
        span = (start, start + 1)
        token = tree.token
        if token.pos in ("conjunction", "punctuation"):
            walk.record(span, "TN", _VACUOUS)
            return _VACUOUS, span
        if token.pos == "propernoun":
            den = walk.lexicon.denote(token)
            assert isinstance(den.term, Builtin) and den.term.payload is not None
            label = walk.ctx.create(den.term.payload, (walk.sentence_no, start))
            out = Denotation(EntityRef(label), ENTITY)
            walk.record(span, "TN", out)
            return out, span
        den = walk.lexicon.denote(token)
        walk.record(span, "TN", den)
        return den, span

    widths = [len(_subtree_leaves(c)) for c in tree.children]
    offsets = []
    at = start
    for w in widths:
        offsets.append(at)
        at += w
    span = (start, at)

    if len(tree.children) == 1:
        child, _ = _compose_node(tree.children[0], start, walk)
        walk.record(span, "NN", child)
        return child, span

    if len(tree.children) != 2:
        raise CompositionError(tree.label, "n-ary", "n-ary")

    # right first: nouns and objects are interpreted before their modifiers
    right, right_span = _compose_node(tree.children[1], offsets[1], walk)
    left, left_span = _compose_node(tree.children[0], offsets[0], walk)

    if left is _VACUOUS and right is _VACUOUS:
        walk.record(span, "NN", _VACUOUS)
        return _VACUOUS, span
    if left is _VACUOUS or right is _VACUOUS:
        kept = right if left is _VACUOUS else left
        walk.record(span, "NN", kept)
        return kept, span

    if type_compatible(right.semtype, left.semtype):
        out = _apply(right, left, walk, left_span)
        walk.record(span, "FA", out)
        return out, span
    if type_compatible(left.semtype, right.semtype):
        out = _apply(left, right, walk, right_span)
        walk.record(span, "FA", out)
        return out, span
    if left.semtype == PREDICATE and right.semtype == PREDICATE:
        out = _predicate_modify(left, right, walk)
        walk.record(span, "PM", out)
        return out, span
    if _is_entity_like(left) and _is_entity_like(right):
        items = _flatten_entities(left.term) + _flatten_entities(right.term)
        out = Denotation(ListOf(items), ENTITY)
        walk.record(span, "LM", out)
        return out, span

    raise CompositionError(
        getattr(tree, "label", "?"), left.semtype.text(), right.semtype.text()
    )


def _subtree_leaves(tree: ParseTree) -> list[Leaf]:
    return leaves(tree)


def compose_sentence(
    parse: SentenceParse,
    ctx: Context,
    lexicon: Lexicon | None = None,
) -> tuple[Denotation, Context, DerivationTrace]:
    """Compose one binarized sentence, returning (denotation, new context, trace).

    The input context is not mutated; the returned context extends it.
    Declarative roots must come out type t; entity introductions come out
    type e (a single entity or an entity list).
    """
    out_ctx = ctx.copy()
    sentence_no = out_ctx.begin_sentence()
    walk = _Walk(
        ctx=out_ctx,
        sentence_no=sentence_no,
        lexicon=lexicon or DEFAULT_LEXICON,
        supply=NameSupply(),
        trace=DerivationTrace(parse.sentence),
    )
    den, _ = _compose_node(parse.tree, 0, walk)
    if den is _VACUOUS:
        raise NonTruthRootError(f"sentence composed to nothing: {parse.sentence!r}")
    if den.semtype == TRUTH:
        return den, out_ctx, walk.trace
    if _is_entity_like(den):
        return den, out_ctx, walk.trace
    raise NonTruthRootError(
        f"sentence root has type {den.semtype.text()}, expected t: {parse.sentence!r}"
    )
