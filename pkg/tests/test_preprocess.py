import pytest

from fsli.composer import Context, compose_sentence
from fsli.lambda_core import EntityRef, Not, Pred, term_text
from fsli.preprocess import (
    DEFAULT_TRANSLATIONS,
    TranslationFormatError,
    UnrecognizedPatternError,
    bb_parse,
    bb_tokenize,
    lemmatize,
    load_translations,
    normalize_phrases,
    rewrite_conditionals,
    split_sentences,
)
from fsli.trees import Leaf, Node, SentenceParse


class TestNormalizePhrases:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("The quail is the leftmost.", "The quail is first."),
            ("H is to the left of J.", "H is before J."),
            ("X finished third.", "X is the 3rd from the left."),
            ("The raven is the rightmost.", "The raven is last."),
            ("V is more popular than Q.", "V is before Q."),
            ("J is less popular than H.", "J is after H."),
            ("The apples are less expensive than the peaches.", "The apples are after the peaches."),
            ("The oranges are the most expensive.", "The oranges are first."),
            ("The plums are the second-cheapest.", "The plums are the 2nd from the right."),
            ("The kiwis are the third-most expensive.", "The kiwis are the 3rd from the left."),
            ("The tractor is the newest.", "The tractor is last."),
            ("The hatchback is older than the convertible.", "The hatchback is before the convertible."),
            ("Amy finished above Eli.", "Amy is before Eli."),
            ("Eve finished last.", "Eve is last."),
            ("The black book is the second from the left.", "The black book is the 2nd from the left."),
            ("The gray book is the first from the right.", "The gray book is last."),
            ("Zoe is the second-tallest.", "Zoe is the 2nd from the left."),
            ("The train is the fastest.", "The train is first."),
            ("The red team is more numerous than the blue team.", "The red team is before the blue team."),
            ("The green team is the least numerous.", "The green team is last."),
        ],
    )
    def test_translations(self, raw, expected):
        assert normalize_phrases(raw) == expected

    def test_unmatched_text_passes_through(self):
        assert normalize_phrases("S is not seventh.") == "S is not seventh."
        assert normalize_phrases("A pink monkey is eating an apple.") == (
            "A pink monkey is eating an apple."
        )

    def test_idempotent_on_own_output(self):
        inputs = [
            "The quail is the leftmost.",
            "Amy finished above Eli.",
            "The plums are the second-cheapest.",
            "In a fruit stand, there are five fruits: apples, oranges, and plums.",
        ]
        for s in inputs:
            once = normalize_phrases(s)
            assert normalize_phrases(once) == once

    def test_header_items_get_articles(self):
        out = normalize_phrases(
            "In a fruit stand, there are five fruits: apples, oranges, peaches, plums, and loquats."
        )
        assert out.endswith(": an apple, an orange, a peach, a plum, and a loquat.")

    def test_header_with_names_unchanged(self):
        s = "There are seven TV programs: H, J, L, P, Q, S, and V."
        assert normalize_phrases(s) == s

    def test_custom_table_loading(self):
        rules = load_translations("mine\t\tbigger than\t\tbefore\tbig-first\n")
        assert normalize_phrases("A is bigger than B.", rules) == "A is before B."
        with pytest.raises(TranslationFormatError):
            load_translations("too\tfew\tcolumns\n")
        with pytest.raises(TranslationFormatError):
            load_translations("cat\t\t\t\tbefore\taxis\n")


class TestRewriteConditionals:
    def test_two_conditions_example(self):
        q = (
            "If V is more popular than Q and J is less popular than L, "
            "then which one of the following could be true of the ranking?"
        )
        assert rewrite_conditionals(q) == (
            "V is more popular than Q. J is less popular than L. What is true?"
        )

    def test_single_condition_must(self):
        assert rewrite_conditionals("If A is before B, then what must be true?") == (
            "A is before B. What must be true?"
        )

    def test_cannot(self):
        out = rewrite_conditionals("If A is before B, then which one cannot be true?")
        assert out == "A is before B. What is not true?"

    def test_non_conditional_unchanged(self):
        assert rewrite_conditionals("What must be true?") == "What must be true?"

    def test_pipeline_equivalence_is_checked_in_discourse_tests(self):
        # the end-to-end identity check lives in test_discourse
        assert True


class TestLemmatize:
    @pytest.mark.parametrize(
        "word,pos,expected",
        [
            ("birds", "noun", "bird"),
            ("eating", "verb", "eat"),
            ("cantaloupes", "noun", "cantaloupe"),
            ("peaches", "noun", "peach"),
            ("boxes", "noun", "box"),
            ("children", "noun", "child"),
            ("cherries", "noun", "cherry"),
            ("finished", "verb", "finish"),
            ("sitting", "verb", "sit"),
            ("selling", "verb", "sell"),
            ("placed", "verb", "place"),
            ("apple", "noun", "apple"),
            ("glass", "noun", "glass"),
        ],
    )
    def test_cases(self, word, pos, expected):
        assert lemmatize(word, pos) == expected

    def test_fruit_vocabulary_audit(self):
        singulars = {
            "apples": "apple",
            "oranges": "orange",
            "peaches": "peach",
            "plums": "plum",
            "loquats": "loquat",
            "kiwis": "kiwi",
            "pears": "pear",
            "mangoes": "mango",
            "watermelons": "watermelon",
            "cantaloupes": "cantaloupe",
        }
        for plural, singular in singulars.items():
            assert lemmatize(plural, "noun") == singular


def compose_one(sentence, ctx=None):
    den, ctx, _ = compose_sentence(bb_parse(normalize_phrases(sentence)), ctx or Context())
    return den, ctx


class TestBBParse:
    def test_positional_sentence(self):
        _, ctx = compose_one("On a branch, there are three birds: a raven, a quail, and a crow.")
        den, _ = compose_one("The quail is first.", ctx)
        assert den.term == Pred(
            "position", (EntityRef("q"), Pred("first"), Pred("1"))
        )

    def test_negated_ordinal(self):
        _, ctx = compose_one("There are seven TV programs: H, J, L, P, Q, S, and V.")
        den, _ = compose_one("S is not seventh.", ctx)
        assert den.term == Not(
            Pred("position", (EntityRef("s"), Pred("first"), Pred("7")))
        )

    def test_out_of_grammar(self):
        with pytest.raises(UnrecognizedPatternError):
            bb_parse("zzz qqq.")
        with pytest.raises(UnrecognizedPatternError):
            bb_parse("")
        with pytest.raises(UnrecognizedPatternError):
            bb_parse("The quail flew away quickly.")

    def test_immediately_before_and_after(self):
        _, ctx = compose_one("There are three trains: a steamer, a diesel, and a railcar.")
        den, _ = compose_one("The steamer is immediately before the diesel.", ctx)
        assert term_text(den.term) == "precede(s, d)"
        den, _ = compose_one("The railcar is immediately after the diesel.", ctx)
        assert term_text(den.term) == "succeed(r, d)"

    def test_tokens_match_leaves_and_drop_precolon(self):
        parse = bb_parse("On a branch, there are three birds: a raven and a crow.")
        texts = [t.text for t in parse.tokens]
        assert texts == ["a", "raven", "and", "a", "crow"]

    def test_binarized_output(self):
        def arity_ok(tree):
            if isinstance(tree, Leaf):
                return True
            return 1 <= len(tree.children) <= 2 and all(arity_ok(c) for c in tree.children)

        assert arity_ok(bb_parse("The black book is the second from the left.").tree)

    def test_external_tree_path_matches_pattern_grammar(self):
        # n-ary tree as an external annotator would emit it, binarized on load
        toks = bb_tokenize("A pink monkey is eating an apple.")
        nary = Node(
            "S",
            (
                Node("NP", (Leaf(toks[0]), Leaf(toks[1]), Leaf(toks[2]))),
                Node(
                    "VP",
                    (Leaf(toks[3]), Leaf(toks[4]), Node("NP", (Leaf(toks[5]), Leaf(toks[6])))),
                ),
            ),
        )
        external = SentenceParse("A pink monkey is eating an apple.", nary, tuple(toks)).binarized()
        den_ext, ctx_ext, _ = compose_sentence(external, Context())
        den_own, ctx_own, _ = compose_sentence(
            bb_parse("A pink monkey is eating an apple."), Context()
        )
        assert den_ext.term == den_own.term
        assert den_ext.semtype == den_own.semtype
        assert ctx_ext.as_dict() == ctx_own.as_dict()

    def test_tokenizer_positional_collapse(self):
        toks = bb_tokenize("The raven is the second from the left.")
        assert [t.lemma for t in toks] == ["the", "raven", "be", "second"]
        assert toks[-1].pos == "numeral"
        toks = bb_tokenize("The plums are the 2nd from the right.")
        assert toks[-1].lemma == "secondL"

    def test_two_part_names_merge(self):
        toks = bb_tokenize("New York is before Old Town.")
        assert [t.lemma for t in toks] == ["new-york", "be", "before", "old-town"]
        den, ctx = compose_one("New York is before Old Town.")
        assert term_text(den.term) == "before(n, o)"
        assert ctx.as_dict() == {"n": "new-york(n)", "o": "old-town(o)"}

    def test_comma_separated_names_stay_apart(self):
        toks = bb_tokenize("H, J, L, P, Q, S, and V")
        assert [t.lemma for t in toks] == ["h", "j", "l", "p", "q", "s", "and", "v"]


def test_split_sentences():
    assert split_sentences("A b. C d? E f.") == ["A b.", "C d?", "E f."]
    assert split_sentences("  ") == []
