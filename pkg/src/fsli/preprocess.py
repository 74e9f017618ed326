"""Text normalization ahead of composition.

Scale phrases ("more expensive than", "finished third", "leftmost") are
rewritten onto a small canonical ordering sublanguage; each scale fixes
its axis direction in the translation table, which is data, not code.
A deterministic pattern grammar then turns canonical sentences into
binarized parses so the core pipeline needs no external NLP toolkit.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .lexicon import ORDINAL_WORDS, AnnotatedToken, ordinal_value
from .trees import Leaf, Node, ParseTree, SentenceParse


class TranslationFormatError(ValueError):
    pass


class UnrecognizedPatternError(ValueError):
    def __init__(self, sentence: str, why: str = ""):
        detail = f" ({why})" if why else ""
        super().__init__(f"sentence not covered by the pattern grammar{detail}: {sentence!r}")
        self.sentence = sentence


@dataclass(frozen=True)
class TranslationRule:
    category: str
    preceding: str | None
    keyword: str
    succeeding: str | None
    replacement: str  # before | after | first | last | <ord> | <ord>L
    axis: str

    def phrase(self) -> str:
        bits = [self.preceding or "", self.keyword, self.succeeding or ""]
        return " ".join(b for b in bits if b)

    def patterns(self) -> tuple[re.Pattern, ...]:
        full = re.compile(rf"(?<![A-Za-z]){re.escape(self.phrase())}(?![A-Za-z])", re.IGNORECASE)
        if not self.preceding:
            return (full,)
        bare = self.keyword + (f" {self.succeeding}" if self.succeeding else "")
        fallback = re.compile(rf"(?<![A-Za-z]){re.escape(bare)}(?![A-Za-z])", re.IGNORECASE)
        return (full, fallback)


_DIGIT_FORMS = {1: "1st", 2: "2nd", 3: "3rd", 4: "4th", 5: "5th", 6: "6th", 7: "7th", 8: "8th", 9: "9th"}

# columns: category, preceding, keyword, succeeding, replacement, axis.
# {ord} rows expand over the ordinal words two..ninth at load time.
DEFAULT_TRANSLATION_TABLE = """\
direction\tto the\tright\tof\tafter\tleft-first
direction\tto the\tleft\tof\tbefore\tleft-first
direction\tthe\trightmost\t\tlast\tleft-first
direction\tthe\tleftmost\t\tfirst\tleft-first
relative-position\tthe\tfirst from the left\t\tfirst\tleft-first
relative-position\tthe\tfirst from the right\t\tlast\tleft-first
relative-position\tthe\t{ord} from the left\t\t{ord}\tleft-first
relative-position\tthe\t{ord} from the right\t\t{ord}L\tleft-first
performance\t\tfinished above\t\tbefore\twinner-first
performance\t\tfinished below\t\tafter\twinner-first
performance\t\tfinished first\t\tfirst\twinner-first
performance\t\tfinished last\t\tlast\twinner-first
performance\t\tfinished {ord}\t\t{ord}\twinner-first
expense\t\tmore expensive than\t\tbefore\tpriciest-first
expense\t\tless expensive than\t\tafter\tpriciest-first
expense\t\tcheaper than\t\tafter\tpriciest-first
expense\tthe\tmost expensive\t\tfirst\tpriciest-first
expense\tthe\tleast expensive\t\tlast\tpriciest-first
expense\tthe\tcheapest\t\tlast\tpriciest-first
expense\tthe\t{ord} most expensive\t\t{ord}\tpriciest-first
expense\tthe\t{ord} cheapest\t\t{ord}L\tpriciest-first
expense\tthe\t{ord} least expensive\t\t{ord}L\tpriciest-first
speed\t\tfaster than\t\tbefore\tfastest-first
speed\t\tslower than\t\tafter\tfastest-first
speed\tthe\tfastest\t\tfirst\tfastest-first
speed\tthe\tslowest\t\tlast\tfastest-first
speed\tthe\t{ord} fastest\t\t{ord}\tfastest-first
speed\tthe\t{ord} slowest\t\t{ord}L\tfastest-first
time\t\tolder than\t\tbefore\toldest-first
time\t\tnewer than\t\tafter\toldest-first
time\t\tearlier than\t\tbefore\toldest-first
time\t\tlater than\t\tafter\toldest-first
time\tthe\toldest\t\tfirst\toldest-first
time\tthe\tnewest\t\tlast\toldest-first
time\tthe\tearliest\t\tfirst\toldest-first
time\tthe\tlatest\t\tlast\toldest-first
time\tthe\t{ord} oldest\t\t{ord}\toldest-first
time\tthe\t{ord} newest\t\t{ord}L\toldest-first
popularity\t\tmore popular than\t\tbefore\tpopular-first
popularity\t\tless popular than\t\tafter\tpopular-first
popularity\tthe\tmost popular\t\tfirst\tpopular-first
popularity\tthe\tleast popular\t\tlast\tpopular-first
popularity\tthe\t{ord} most popular\t\t{ord}\tpopular-first
popularity\tthe\t{ord} least popular\t\t{ord}L\tpopular-first
height\t\ttaller than\t\tbefore\ttallest-first
height\t\tshorter than\t\tafter\ttallest-first
height\tthe\ttallest\t\tfirst\ttallest-first
height\tthe\tshortest\t\tlast\ttallest-first
height\tthe\t{ord} tallest\t\t{ord}\ttallest-first
height\tthe\t{ord} shortest\t\t{ord}L\ttallest-first
quantity\t\tmore numerous than\t\tbefore\tmost-first
quantity\t\tless numerous than\t\tafter\tmost-first
quantity\tthe\tmost numerous\t\tfirst\tmost-first
quantity\tthe\tleast numerous\t\tlast\tmost-first
"""


def load_translations(text: str) -> list[TranslationRule]:
    """Parse a tab-separated translation table, expanding {ord} macros."""
    rules: list[TranslationRule] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 6:
            raise TranslationFormatError(f"line {lineno}: expected 6 tab-separated columns")
        category, preceding, keyword, succeeding, replacement, axis = (c.strip() for c in cols)
        if not keyword:
            raise TranslationFormatError(f"line {lineno}: keyword must be nonempty")
        variants = [(keyword, replacement)]
        if "{ord}" in keyword:
            variants = []
            for word, value in ORDINAL_WORDS.items():
                if value == 1:
                    continue  # k=1 rows are spelled out explicitly
                variants.append(
                    (keyword.replace("{ord}", word), replacement.replace("{ord}", word))
                )
        for kw, rep in variants:
            rules.append(
                TranslationRule(category, preceding or None, kw, succeeding or None, rep, axis)
            )
    # longest phrase first so e.g. "second most expensive" beats "most expensive"
    rules.sort(key=lambda r: len(r.phrase()), reverse=True)
    return rules


DEFAULT_TRANSLATIONS = load_translations(DEFAULT_TRANSLATION_TABLE)

_COPULAS = ("is", "are", "was", "were")


@functools.lru_cache(maxsize=None)
def _rule_patterns(rule: TranslationRule) -> tuple[re.Pattern, ...]:
    return rule.patterns()


def _surface(replacement: str) -> str:
    if replacement in ("before", "after", "first", "last"):
        return replacement
    anchor = "left"
    word = replacement
    if word.endswith("L"):
        anchor = "right"
        word = word[:-1]
    k = ordinal_value(word)
    if k is None:
        raise TranslationFormatError(f"unknown replacement {replacement!r}")
    return f"the {_DIGIT_FORMS[k]} from the {anchor}"


def _singular_article(noun: str) -> str:
    return "an" if noun[:1].lower() in "aeiou" else "a"


def _canonicalize_header_items(sentence: str) -> str:
    """Give bare plural list items an indefinite article + singular noun."""
    head, _, tail = sentence.partition(":")
    if not tail.strip():
        return sentence
    body = tail.strip()
    trailing = ""
    if body.endswith("."):
        body, trailing = body[:-1], "."
    chunks = re.split(r"\s*,\s*(?:and\s+)?|\s+and\s+", body)
    items = [c.strip() for c in chunks if c.strip()]
    if not items:
        return sentence
    fixed: list[str] = []
    for item in items:
        words = item.split()
        first = words[0].lower()
        if first in ("a", "an", "the") or words[0][:1].isupper():
            fixed.append(item)
            continue
        noun = lemmatize(words[-1], "noun")
        rebuilt = " ".join(words[:-1] + [noun])
        fixed.append(f"{_singular_article(rebuilt)} {rebuilt}")
    if len(fixed) == 1:
        joined = fixed[0]
    elif len(fixed) == 2:
        joined = f"{fixed[0]} and {fixed[1]}"
    else:
        joined = ", ".join(fixed[:-1]) + f", and {fixed[-1]}"
    return f"{head}: {joined}{trailing}"


def normalize_phrases(sentence: str, rules: list[TranslationRule] | None = None) -> str:
    """Rewrite scale phrases into the canonical ordering sublanguage.

    Pure text rewriting; unmatched text passes through unchanged and the
    function is idempotent on its own output.
    """
    rules = rules if rules is not None else DEFAULT_TRANSLATIONS
    s = re.sub(r"(?<=[a-z])-(?=[a-z])", " ", sentence, flags=re.IGNORECASE)
    s = re.sub(r"\s*,\s*", ", ", s)
    s = re.sub(r"\s+", " ", s).strip()
    if ":" in s:
        s = _canonicalize_header_items(s)

    changed = True
    while changed:
        changed = False
        for rule in rules:
            match = None
            for pattern in _rule_patterns(rule):
                match = pattern.search(s)
                if match is not None:
                    break
            if match is None:
                continue
            emission = _surface(rule.replacement)
            before_text = s[: match.start()].rstrip()
            prev_word = before_text.rsplit(" ", 1)[-1].lower() if before_text else ""
            if prev_word not in _COPULAS and prev_word != "not":
                emission = f"is {emission}"
            s = s[: match.start()] + emission + s[match.end():]
            s = re.sub(r"\s+", " ", s).strip()
            changed = True
            break
    return s


_MODE_QUESTIONS = (
    (re.compile(r"must\s+be\s+true", re.IGNORECASE), "What must be true?"),
    (
        re.compile(r"cannot\s+be\s+true|could\s+not\s+be\s+true|not\s+be\s+true|is\s+not\s+true|must\s+be\s+false", re.IGNORECASE),
        "What is not true?",
    ),
    (re.compile(r"could\s+be\s+true|is\s+true|be\s+true", re.IGNORECASE), "What is true?"),
)


def _clause_like(text: str) -> bool:
    return bool(re.search(r"\b(is|are|was|were|finished)\b", text, re.IGNORECASE))


def rewrite_conditionals(question: str) -> str:
    """Turn "If C1 and C2, then which ... could be true ..." into
    "C1. C2. What is true?" (and likewise for must/cannot)."""
    match = re.match(r"\s*If\s+(?P<conds>.+?),?\s+then\s+(?P<rest>.+)$", question, re.IGNORECASE)
    if match is None:
        return question
    rest = match.group("rest")
    mode_question = None
    for pattern, canonical in _MODE_QUESTIONS:
        if pattern.search(rest):
            mode_question = canonical
            break
    if mode_question is None:
        return question
    conds = match.group("conds").strip().rstrip(",")
    parts = re.split(r"\s+and\s+", conds)
    clauses = parts if all(_clause_like(p) for p in parts) else [conds]
    rendered = []
    for clause in clauses:
        clause = clause.strip().rstrip(".")
        rendered.append(clause[:1].upper() + clause[1:] + ".")
    return " ".join(rendered + [mode_question])


# ---------------------------------------------------------------------------
# lemmatization (rule-based, domain-scale vocabulary)

_IRREGULAR_NOUNS = {
    "children": "child",
    "people": "person",
    "men": "man",
    "women": "woman",
    "geese": "goose",
    "mice": "mouse",
    "feet": "foot",
    "teeth": "tooth",
    "oxen": "ox",
    "leaves": "leaf",
    "knives": "knife",
    "wolves": "wolf",
    "shelves": "shelf",
    "loaves": "loaf",
    # -is/-us endings that really are plain plurals
    "kiwis": "kiwi",
    "taxis": "taxi",
    "buses": "bus",
}

_VERB_SEEDS = {
    "eating": "eat",
    "finished": "finish",
    "finishing": "finish",
    "arranged": "arrange",
    "placed": "place",
    "racing": "race",
    "raced": "race",
    "ranked": "rank",
    "ordered": "order",
    "scheduled": "schedule",
    "parked": "park",
    "priced": "price",
    "seated": "seat",
    "compared": "compare",
    "displayed": "display",
}


def lemmatize(word: str, pos: str) -> str:
    """Base form for the restricted domain; identity when no rule applies."""
    w = word.lower()
    if pos == "noun":
        if w in _IRREGULAR_NOUNS:
            return _IRREGULAR_NOUNS[w]
        if w.endswith("ies") and len(w) > 4:
            return w[:-3] + "y"
        if w.endswith(("ses", "xes", "zes", "ches", "shes", "oes")):
            return w[:-2]
        if w.endswith("s") and not w.endswith(("ss", "us", "is")):
            return w[:-1]
        return w
    if pos == "verb":
        if w in _VERB_SEEDS:
            return _VERB_SEEDS[w]
        stem = None
        if w.endswith("ying") and len(w) > 5:
            stem = w[:-4] + "y" if w[:-4].endswith(("l", "r")) else w[:-4]
        elif w.endswith("ing") and len(w) > 4:
            stem = w[:-3]
        elif w.endswith("ied") and len(w) > 4:
            return w[:-3] + "y"
        elif w.endswith("ed") and len(w) > 3:
            stem = w[:-2]
        if stem is None:
            return w
        if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
            stem = stem[:-1]
        return stem
    return w


# ---------------------------------------------------------------------------
# tokenizer for the canonical sublanguage

_ARTICLES = {"a", "an", "the"}
_FUNCTION_WORDS = {
    "there", "here", "on", "in", "at", "of", "to", "from",
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
}
_SIDE_WORDS = {"left": "", "right": "L"}


def _ordinal_lemma(word: str) -> str | None:
    k = ordinal_value(word)
    if k is None:
        return None
    for name, value in ORDINAL_WORDS.items():
        if value == k:
            return name
    return None


def bb_tokenize(sentence: str) -> list[AnnotatedToken]:
    text = sentence.strip()
    text = re.sub(r"[.?!]+$", "", text)
    text = text.replace(",", " , ")
    words = text.split()
    tokens: list[AnnotatedToken] = []
    groups: list[int] = []  # comma-delimited group per token
    group = 0

    def emit(token: AnnotatedToken) -> None:
        tokens.append(token)
        groups.append(group)

    i = 0
    while i < len(words):
        if words[i] == ",":
            group += 1
            i += 1
            continue
        lower = words[i].lower()

        if lower in ("immediately", "directly") and i + 1 < len(words):
            nxt = words[i + 1].lower()
            if nxt in ("before", "after"):
                lemma = "succeed" if nxt == "after" else "precede"
                emit(AnnotatedToken(f"{words[i]} {words[i+1]}", lemma, "verb"))
                i += 2
                continue

        # [the] <ord> from the <left|right>
        j = i
        if lower == "the" and j + 1 < len(words):
            j += 1
        ord_lemma = _ordinal_lemma(words[j]) if j < len(words) else None
        if (
            ord_lemma
            and j + 3 < len(words)
            and words[j + 1].lower() == "from"
            and words[j + 2].lower() == "the"
            and words[j + 3].lower() in _SIDE_WORDS
        ):
            side = _SIDE_WORDS[words[j + 3].lower()]
            surface = " ".join(words[i : j + 4])
            emit(AnnotatedToken(surface, ord_lemma + side, "numeral"))
            i = j + 4
            continue

        if lower in _ARTICLES:
            emit(AnnotatedToken(words[i], lower, "determiner"))
        elif lower in _COPULAS:
            emit(AnnotatedToken(words[i], "be", "auxiliary"))
        elif lower == "not":
            emit(AnnotatedToken(words[i], "not", "negation"))
        elif lower == "and":
            emit(AnnotatedToken(words[i], "and", "conjunction"))
        elif lower in ("before", "after"):
            emit(AnnotatedToken(words[i], lower, "verb"))
        elif _ordinal_lemma(words[i]):
            emit(AnnotatedToken(words[i], _ordinal_lemma(words[i]), "numeral"))
        elif lower == "last":
            emit(AnnotatedToken(words[i], "last", "adjective"))
        elif lower in _FUNCTION_WORDS:
            emit(AnnotatedToken(words[i], lower, "other"))
        elif lower.endswith("ing") and tokens and tokens[-1].pos in ("auxiliary", "negation"):
            emit(AnnotatedToken(words[i], lemmatize(lower, "verb"), "verb"))
        elif words[i][:1].isupper():
            emit(AnnotatedToken(words[i], lower, "propernoun", "ENTITY"))
        else:
            emit(AnnotatedToken(words[i], lemmatize(lower, "noun"), "noun"))
        i += 1

    # "A" is the entity name, not the article, unless a content word follows
    for idx, tok in enumerate(tokens):
        if tok.text == "A" and tok.pos == "determiner":
            nxt = tokens[idx + 1] if idx + 1 < len(tokens) else None
            if nxt is None or nxt.pos not in ("noun", "adjective"):
                tokens[idx] = AnnotatedToken("A", "a", "propernoun", "ENTITY")

    # adjacent names in the same comma group are one two-part name
    merged: list[AnnotatedToken] = []
    merged_groups: list[int] = []
    for tok, grp in zip(tokens, groups):
        prev = merged[-1] if merged else None
        if (
            prev is not None
            and prev.pos == "propernoun"
            and tok.pos == "propernoun"
            and merged_groups[-1] == grp
        ):
            merged[-1] = AnnotatedToken(
                f"{prev.text} {tok.text}", f"{prev.lemma}-{tok.lemma}", "propernoun", "ENTITY"
            )
            continue
        merged.append(tok)
        merged_groups.append(grp)
    return merged


# ---------------------------------------------------------------------------
# pattern grammar -> binarized trees


def _leaf(tok: AnnotatedToken) -> Leaf:
    return Leaf(tok)


def _as_adjective(tok: AnnotatedToken) -> AnnotatedToken:
    if tok.pos == "adjective":
        return tok
    return AnnotatedToken(tok.text, tok.lemma, "adjective", tok.ner)


class _TokenCursor:
    def __init__(self, tokens: list[AnnotatedToken], sentence: str):
        self.tokens = tokens
        self.sentence = sentence
        self.i = 0

    def peek(self) -> AnnotatedToken | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> AnnotatedToken:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, why: str):
        raise UnrecognizedPatternError(self.sentence, why)


def _parse_np(cur: _TokenCursor) -> tuple[ParseTree, list[AnnotatedToken]]:
    tok = cur.peek()
    if tok is None:
        cur.fail("expected a noun phrase")
    if tok.pos == "propernoun":
        cur.take()
        return _leaf(tok), [tok]
    if tok.pos != "determiner":
        cur.fail(f"expected article or name, saw {tok.text!r}")
    det = cur.take()
    content: list[AnnotatedToken] = []
    while True:
        nxt = cur.peek()
        if nxt is not None and nxt.pos in ("noun", "adjective") and nxt.lemma != "last":
            content.append(cur.take())
        else:
            break
    if not content:
        cur.fail(f"article {det.text!r} without a noun")
    fixed = [_as_adjective(t) for t in content[:-1]] + [content[-1]]
    nom: ParseTree = _leaf(fixed[-1])
    for adj in reversed(fixed[:-1]):
        nom = Node("NOM", (_leaf(adj), nom))
    tree = Node("NP", (_leaf(det), nom))
    return tree, [det] + fixed


def _parse_predicate(cur: _TokenCursor) -> tuple[ParseTree, list[AnnotatedToken]]:
    tok = cur.peek()
    if tok is None:
        cur.fail("missing predicate after copula")
    if tok.pos == "numeral" or (tok.pos == "adjective" and tok.lemma == "last"):
        cur.take()
        return _leaf(tok), [tok]
    if tok.pos == "verb":
        verb = cur.take()
        np, np_tokens = _parse_np(cur)
        return Node("RELP", (_leaf(verb), np)), [verb] + np_tokens
    if tok.pos in ("noun", "adjective"):
        word = cur.take()
        if cur.peek() is not None and cur.peek().pos in ("noun", "adjective"):
            cur.fail("multiword predicate")
        adj = _as_adjective(word)
        return _leaf(adj), [adj]
    cur.fail(f"cannot use {tok.text!r} as a predicate")


def _parse_entity_list(tokens: list[AnnotatedToken], sentence: str) -> SentenceParse:
    cur = _TokenCursor(tokens, sentence)
    groups: list[tuple[ParseTree, list[AnnotatedToken]]] = []
    conj: AnnotatedToken | None = None
    while cur.peek() is not None:
        tok = cur.peek()
        if tok.pos == "conjunction":
            if conj is not None or not groups:
                cur.fail("misplaced conjunction in entity list")
            conj = cur.take()
            if cur.peek() is None:
                cur.fail("dangling conjunction")
            np, np_tokens = _parse_np(cur)
            groups.append((np, np_tokens))
            if cur.peek() is not None:
                cur.fail("tokens after the final list item")
            break
        groups.append(_parse_np(cur))
    if not groups:
        cur.fail("empty entity list")
    if len(groups) == 1:
        tree, toks = groups[0]
        return SentenceParse(sentence, tree, tuple(toks))
    trees = [g[0] for g in groups]
    token_seq: list[AnnotatedToken] = []
    for _, toks in groups[:-1]:
        token_seq.extend(toks)
    if conj is not None:
        token_seq.append(conj)
    token_seq.extend(groups[-1][1])
    comb: ParseTree = trees[-1]
    if conj is not None:
        comb = Node("LST", (_leaf(conj), comb))
    for np in reversed(trees[:-1]):
        comb = Node("LST", (np, comb))
    return SentenceParse(sentence, comb, tuple(token_seq))


def bb_parse(sentence: str) -> SentenceParse:
    """Parse one canonical-sublanguage sentence into a binarized tree.

    Covered: entity-enumeration headers ("...: a raven, a quail, and a
    crow."), copular position sentences, binary relation sentences, the
    progressive transitive form, and their negations. Anything else
    raises UnrecognizedPatternError.
    """
    stripped = sentence.strip()
    if not stripped:
        raise UnrecognizedPatternError(sentence, "empty sentence")

    if ":" in stripped:
        _, _, tail = stripped.partition(":")
        tokens = bb_tokenize(tail)
        if not tokens:
            raise UnrecognizedPatternError(sentence, "nothing after the colon")
        return _parse_entity_list(tokens, stripped)

    tokens = bb_tokenize(stripped)
    if not tokens:
        raise UnrecognizedPatternError(sentence, "no tokens")
    cur = _TokenCursor(tokens, stripped)
    subject, subject_tokens = _parse_np(cur)
    aux = cur.peek()
    if aux is None or aux.pos != "auxiliary":
        cur.fail("expected is/are after the subject")
    aux = cur.take()
    negation: AnnotatedToken | None = None
    if cur.peek() is not None and cur.peek().pos == "negation":
        negation = cur.take()
    predicate, predicate_tokens = _parse_predicate(cur)
    if cur.peek() is not None:
        cur.fail(f"trailing tokens from {cur.peek().text!r}")
    if negation is not None:
        predicate = Node("NEG", (_leaf(negation), predicate))
        predicate_tokens = [negation] + predicate_tokens
    vp = Node("VP", (_leaf(aux), predicate))
    tree = Node("S", (subject, vp))
    token_seq = tuple(subject_tokens + [aux] + predicate_tokens)
    return SentenceParse(stripped, tree, token_seq)


def split_sentences(text: str) -> list[str]:
    parts = re.split(r"(?<=[.!?])\s+", text.strip())
    return [p.strip() for p in parts if p.strip()]
