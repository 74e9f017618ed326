"""Constituency-tree data model, right-factored CNF binarization, and the
line-delimited JSON exchange format shared with external annotators."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .lexicon import TAGSET, AnnotatedToken


class EmptyTreeError(ValueError):
    pass


class FormatError(ValueError):
    """Malformed annotated-tree input; message carries line/field detail."""


class ConsistencyError(ValueError):
    """Tokens and tree leaves disagree."""


@dataclass(frozen=True)
class Leaf:
    token: AnnotatedToken


@dataclass(frozen=True)
class Node:
    label: str
    children: tuple["ParseTree", ...]


ParseTree = Leaf | Node


def leaves(tree: ParseTree) -> list[Leaf]:
    if isinstance(tree, Leaf):
        return [tree]
    out: list[Leaf] = []
    for child in tree.children:
        out.extend(leaves(child))
    return out


def binarize_cnf(tree: ParseTree) -> ParseTree:
    """Right-factored binarization; introduced nodes get a ``|`` suffix.

    Leaf order is preserved and re-binarizing is a no-op.
    """
    if isinstance(tree, Leaf):
        return tree
    if not tree.children:
        raise EmptyTreeError(f"node {tree.label!r} has no children")
    if len(tree.children) <= 2:
        return Node(tree.label, tuple(binarize_cnf(c) for c in tree.children))
    head = binarize_cnf(tree.children[0])
    rest = Node(tree.label + "|", tree.children[1:])
    return Node(tree.label, (head, binarize_cnf(rest)))


@dataclass(frozen=True)
class SentenceParse:
    sentence: str
    tree: ParseTree
    tokens: tuple[AnnotatedToken, ...]

    def __post_init__(self):
        got = tuple(leaf.token for leaf in leaves(self.tree))
        if got != self.tokens:
            raise ConsistencyError(
                f"tokens do not match tree leaves for {self.sentence!r}"
            )

    def binarized(self) -> "SentenceParse":
        return SentenceParse(self.sentence, binarize_cnf(self.tree), self.tokens)


# ---------------------------------------------------------------------------
# annotated-tree JSONL


def _tree_to_json(tree: ParseTree, counter: list[int]) -> dict:
    # leaves appear in token order, so a running counter indexes them
    if isinstance(tree, Leaf):
        idx = counter[0]
        counter[0] += 1
        return {"leaf": idx}
    return {"label": tree.label, "children": [_tree_to_json(c, counter) for c in tree.children]}


def sentence_to_json(parse: SentenceParse) -> dict:
    return {
        "sentence": parse.sentence,
        "tokens": [
            {"text": t.text, "lemma": t.lemma, "pos": t.pos, "ner": t.ner}
            for t in parse.tokens
        ],
        "tree": _tree_to_json(parse.tree, [0]),
    }


def write_annotated_trees(parses: list[SentenceParse]) -> str:
    return "".join(json.dumps(sentence_to_json(p), ensure_ascii=False) + "\n" for p in parses)


def _tree_from_json(obj, tokens: tuple[AnnotatedToken, ...], lineno: int, seen: list[int]) -> ParseTree:
    if not isinstance(obj, dict):
        raise FormatError(f"line {lineno}: tree node must be an object")
    if "leaf" in obj:
        idx = obj["leaf"]
        if not isinstance(idx, int) or not 0 <= idx < len(tokens):
            raise FormatError(f"line {lineno}: leaf index {idx!r} out of range")
        if seen and idx <= seen[-1]:
            raise FormatError(
                f"line {lineno}: leaf indices must be strictly increasing "
                f"left to right (saw {idx} after {seen[-1]})"
            )
        seen.append(idx)
        return Leaf(tokens[idx])
    if "label" not in obj or "children" not in obj:
        raise FormatError(f"line {lineno}: tree node needs label+children or leaf")
    kids = obj["children"]
    if not isinstance(kids, list) or not kids:
        raise FormatError(f"line {lineno}: node {obj['label']!r} children must be a nonempty list")
    return Node(
        str(obj["label"]),
        tuple(_tree_from_json(c, tokens, lineno, seen) for c in kids),
    )


def _token_from_json(obj, lineno: int, pos_in_line: int) -> AnnotatedToken:
    if not isinstance(obj, dict):
        raise FormatError(f"line {lineno}: token {pos_in_line} must be an object")
    for fieldname in ("text", "lemma", "pos"):
        if not isinstance(obj.get(fieldname), str) or not obj.get(fieldname):
            raise FormatError(
                f"line {lineno}: token {pos_in_line} missing field {fieldname!r}"
            )
    if obj["pos"] not in TAGSET:
        raise FormatError(
            f"line {lineno}: token {pos_in_line} pos {obj['pos']!r} not in tagset"
        )
    ner = obj.get("ner")
    if ner is not None and not isinstance(ner, str):
        raise FormatError(f"line {lineno}: token {pos_in_line} ner must be string or null")
    return AnnotatedToken(obj["text"], obj["lemma"], obj["pos"], ner)


def read_annotated_tree(data: str | bytes) -> list[SentenceParse]:
    """Parse annotated-tree JSONL; every line must pass schema and
    tokens-equal-leaves validation."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    parses: list[SentenceParse] = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise FormatError(f"line {lineno}: expected an object")
        if not isinstance(obj.get("sentence"), str):
            raise FormatError(f"line {lineno}: missing field 'sentence'")
        raw_tokens = obj.get("tokens")
        if not isinstance(raw_tokens, list) or not raw_tokens:
            raise FormatError(f"line {lineno}: missing or empty field 'tokens'")
        tokens = tuple(
            _token_from_json(t, lineno, i) for i, t in enumerate(raw_tokens)
        )
        if "tree" not in obj:
            raise FormatError(f"line {lineno}: missing field 'tree'")
        seen: list[int] = []
        tree = _tree_from_json(obj["tree"], tokens, lineno, seen)
        if seen != list(range(len(tokens))):
            raise ConsistencyError(
                f"line {lineno}: tree leaves cover token indices {seen}, "
                f"expected every token exactly once in order"
            )
        parses.append(SentenceParse(obj["sentence"], tree, tokens))
    return parses
