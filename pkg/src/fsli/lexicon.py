"""Word-level denotation assignment.

Open-class words (nouns, adjectives, verbs, proper nouns) get templated
denotations keyed on their lemma; closed-class words (copulas, articles,
negation, positional vocabulary) come from a fixed table that wins over
the templates. Extra closed-class items can be registered from a plain
``word<TAB>class`` file without touching code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lambda_core import (
    ANY,
    ENTITY,
    ENTITY_CREATION,
    PREDICATE,
    Abs,
    App,
    Builtin,
    Denotation,
    Fun,
    Not,
    Pred,
    Var,
)

TAGSET = frozenset(
    {
        "noun",
        "propernoun",
        "verb",
        "adjective",
        "determiner",
        "auxiliary",
        "negation",
        "adverb",
        "conjunction",
        "punctuation",
        "numeral",
        "other",
    }
)


class UnknownWordClassError(LookupError):
    def __init__(self, token):
        super().__init__(f"no denotation for {token.text!r} (pos={token.pos})")
        self.token = token


class LexiconFormatError(ValueError):
    pass


@dataclass(frozen=True)
class AnnotatedToken:
    text: str
    lemma: str
    pos: str
    ner: str | None = None

    def __post_init__(self):
        if not self.lemma:
            raise ValueError("token lemma must be nonempty")
        if self.pos not in TAGSET:
            raise ValueError(f"pos {self.pos!r} not in tagset")


ORDINAL_WORDS = {
    "first": 1,
    "second": 2,
    "third": 3,
    "fourth": 4,
    "fifth": 5,
    "sixth": 6,
    "seventh": 7,
    "eighth": 8,
    "ninth": 9,
}
_DIGIT_ORDINALS = {f"{k}{s}": v for k, s, v in
                   (("1", "st", 1), ("2", "nd", 2), ("3", "rd", 3))} | {
    f"{k}th": k_val for k, k_val in (("4", 4), ("5", 5), ("6", 6), ("7", 7), ("8", 8), ("9", 9))
}


def ordinal_value(word: str) -> int | None:
    """1..9 for ordinal words and digit ordinals, else None."""
    w = word.lower()
    return ORDINAL_WORDS.get(w) or _DIGIT_ORDINALS.get(w)


def position_denotation(anchor: str, k: int) -> Denotation:
    """(λx. position(x, anchor, k), <e,t>)"""
    atom = Pred("position", (Var("x"), Pred(anchor), Pred(str(k))))
    return Denotation(Abs("x", atom), PREDICATE)


def _copula() -> Denotation:
    return Denotation(Abs("f", Var("f")), Fun(ANY, ANY))


def _negation() -> Denotation:
    body = Abs("x", Not(App(Var("f"), Var("x"))))
    return Denotation(Abs("f", body), Fun(PREDICATE, PREDICATE))


def _indefinite() -> Denotation:
    return Denotation(Builtin("createEntity"), Fun(PREDICATE, ENTITY))


def _definite() -> Denotation:
    return Denotation(Builtin("getEntity"), Fun(PREDICATE, ENTITY))


def _last_word() -> Denotation:
    return Denotation(Abs("x", Pred("last", (Var("x"),))), PREDICATE)


def noun_denotation(lemma: str) -> Denotation:
    return Denotation(Abs("x", Pred(lemma, (Var("x"),))), PREDICATE)


def verb_denotation(lemma: str) -> Denotation:
    body = Abs("y", Pred(lemma, (Var("y"), Var("x"))))
    return Denotation(Abs("x", body), Fun(ENTITY, PREDICATE))


def propernoun_denotation(lemma: str) -> Denotation:
    description = Abs("x", Pred(lemma.lower(), (Var("x"),)))
    return Denotation(
        Builtin("createEntity", description), Fun(PREDICATE, ENTITY_CREATION)
    )


# word -> factory; factories take the token so lemma-sensitive entries work
_CLOSED_CLASS = {
    "is": lambda tok: _copula(),
    "are": lambda tok: _copula(),
    "was": lambda tok: _copula(),
    "were": lambda tok: _copula(),
    "not": lambda tok: _negation(),
    "a": lambda tok: _indefinite(),
    "an": lambda tok: _indefinite(),
    "the": lambda tok: _definite(),
    "last": lambda tok: _last_word(),
}

# classes accepted in lexicon-extension files
_EXTENSION_CLASSES = {
    "auxiliary": lambda tok: _copula(),
    "negation": lambda tok: _negation(),
    "indefinite": lambda tok: _indefinite(),
    "definite": lambda tok: _definite(),
    "last": lambda tok: _last_word(),
}


def _positional(token: AnnotatedToken) -> Denotation | None:
    lemma = token.lemma
    anchor = "first"
    if lemma.endswith("L"):
        anchor = "last"
        lemma = lemma[:-1]
    k = ordinal_value(lemma)
    if k is None:
        return None
    return position_denotation(anchor, k)


class Lexicon:
    """Deterministic token -> denotation mapping; read-only after setup."""

    def __init__(self):
        self._words = dict(_CLOSED_CLASS)

    def load_extensions(self, text: str) -> int:
        """Register ``word<TAB>class`` lines; returns how many were added."""
        added = 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconFormatError(f"line {lineno}: expected word<TAB>class")
            word, cls = parts[0].strip().lower(), parts[1].strip().lower()
            if cls not in _EXTENSION_CLASSES:
                raise LexiconFormatError(
                    f"line {lineno}: unknown class {cls!r} "
                    f"(expected one of {sorted(_EXTENSION_CLASSES)})"
                )
            self._words[word] = _EXTENSION_CLASSES[cls]
            added += 1
        return added

    def denote(self, token: AnnotatedToken) -> Denotation:
        if token.pos == "propernoun":
            # a name outranks the word table ("A" can name an entity)
            return propernoun_denotation(token.lemma)
        entry = self._words.get(token.text.lower())
        if entry is not None:
            return entry(token)
        if token.pos == "numeral":
            den = _positional(token)
            if den is not None:
                return den
            raise UnknownWordClassError(token)
        if token.pos in ("noun", "adjective"):
            return noun_denotation(token.lemma)
        if token.pos == "verb":
            return verb_denotation(token.lemma)
        raise UnknownWordClassError(token)


DEFAULT_LEXICON = Lexicon()


def denote_word(token: AnnotatedToken, lexicon: Lexicon | None = None) -> Denotation:
    return (lexicon or DEFAULT_LEXICON).denote(token)
