import json

import pytest

from fsli.lexicon import AnnotatedToken
from fsli.preprocess import bb_parse
from fsli.trees import (
    ConsistencyError,
    EmptyTreeError,
    FormatError,
    Leaf,
    Node,
    SentenceParse,
    binarize_cnf,
    leaves,
    read_annotated_tree,
    write_annotated_trees,
)


def tk(text, pos="noun"):
    return AnnotatedToken(text, text.lower(), pos)


def arity_ok(tree):
    if isinstance(tree, Leaf):
        return True
    return 1 <= len(tree.children) <= 2 and all(arity_ok(c) for c in tree.children)


def leaf_texts(tree):
    return [l.token.text for l in leaves(tree)]


def test_ternary_np_right_factored():
    tree = Node("NP", (Leaf(tk("the", "determiner")), Leaf(tk("pink", "adjective")), Leaf(tk("monkey"))))
    out = binarize_cnf(tree)
    assert out == Node(
        "NP",
        (
            Leaf(tk("the", "determiner")),
            Node("NP|", (Leaf(tk("pink", "adjective")), Leaf(tk("monkey")))),
        ),
    )
    assert arity_ok(out)
    assert leaf_texts(out) == leaf_texts(tree)


def test_wide_node_keeps_leaf_order():
    kids = tuple(Leaf(tk(w)) for w in ("a", "b", "c", "d", "e"))
    out = binarize_cnf(Node("X", kids))
    assert arity_ok(out)
    assert leaf_texts(out) == ["a", "b", "c", "d", "e"]


def test_already_binary_is_fixed_point():
    tree = Node("S", (Leaf(tk("a")), Node("VP", (Leaf(tk("b")), Leaf(tk("c"))))))
    assert binarize_cnf(tree) == tree


def test_idempotent():
    kids = tuple(Leaf(tk(w)) for w in ("a", "b", "c", "d"))
    once = binarize_cnf(Node("X", kids))
    assert binarize_cnf(once) == once


def test_unary_chain_preserved():
    tree = Node("S", (Node("NP", (Leaf(tk("word")),)),))
    assert binarize_cnf(tree) == tree


def test_worked_sentence_tree_binarizes():
    # n-ary rendering of the first worked sentence
    toks = [
        tk("A", "determiner"), tk("pink", "adjective"), tk("monkey"),
        tk("is", "auxiliary"), tk("eating", "verb"), tk("an", "determiner"), tk("apple"),
    ]
    nary = Node(
        "S",
        (
            Node("NP", (Leaf(toks[0]), Leaf(toks[1]), Leaf(toks[2]))),
            Node("VP", (Leaf(toks[3]), Leaf(toks[4]), Node("NP", (Leaf(toks[5]), Leaf(toks[6]))))),
        ),
    )
    out = binarize_cnf(nary)
    assert arity_ok(out)
    assert leaf_texts(out) == ["A", "pink", "monkey", "is", "eating", "an", "apple"]


def test_empty_node_raises():
    with pytest.raises(EmptyTreeError):
        binarize_cnf(Node("X", ()))


def test_sentence_parse_consistency_enforced():
    leaf = Leaf(tk("word"))
    with pytest.raises(ConsistencyError):
        SentenceParse("word", leaf, (tk("other"),))


def test_round_trip_identity():
    parses = [bb_parse(s) for s in ("The quail is first.", "A pink monkey is eating an apple.")]
    text = write_annotated_trees(parses)
    back = read_annotated_tree(text)
    assert back == parses
    assert read_annotated_tree(write_annotated_trees(back)) == back


def test_read_rejects_bad_json():
    with pytest.raises(FormatError, match="line 1"):
        read_annotated_tree("{not json\n")


def test_read_rejects_missing_fields():
    with pytest.raises(FormatError, match="sentence"):
        read_annotated_tree(json.dumps({"tokens": [], "tree": {}}) + "\n")
    line = json.dumps({"sentence": "x", "tokens": [{"text": "x", "lemma": "x", "pos": "noun", "ner": None}]})
    with pytest.raises(FormatError, match="tree"):
        read_annotated_tree(line + "\n")


def test_read_rejects_bad_tagset():
    line = json.dumps(
        {
            "sentence": "x",
            "tokens": [{"text": "x", "lemma": "x", "pos": "verbish", "ner": None}],
            "tree": {"leaf": 0},
        }
    )
    with pytest.raises(FormatError, match="tagset"):
        read_annotated_tree(line + "\n")


def test_read_rejects_non_increasing_leaves():
    tokens = [
        {"text": "a", "lemma": "a", "pos": "noun", "ner": None},
        {"text": "b", "lemma": "b", "pos": "noun", "ner": None},
    ]
    line = json.dumps(
        {
            "sentence": "a b",
            "tokens": tokens,
            "tree": {"label": "S", "children": [{"leaf": 1}, {"leaf": 0}]},
        }
    )
    with pytest.raises(FormatError, match="strictly increasing"):
        read_annotated_tree(line + "\n")


def test_read_rejects_uncovered_tokens():
    tokens = [
        {"text": "a", "lemma": "a", "pos": "noun", "ner": None},
        {"text": "b", "lemma": "b", "pos": "noun", "ner": None},
    ]
    line = json.dumps({"sentence": "a b", "tokens": tokens, "tree": {"leaf": 0}})
    with pytest.raises(ConsistencyError):
        read_annotated_tree(line + "\n")
