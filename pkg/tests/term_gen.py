"""Random term generator seeded from the lexicon templates, for the
normalization property suites.

Function positions only ever hold template-shaped lambdas (noun, verb,
copula, negation) or builtins, mirroring what composition can build; in
particular no self-application is constructible, so reduction terminates.
"""

from __future__ import annotations

import random

from fsli.lambda_core import (
    Abs,
    And,
    App,
    Builtin,
    EntityRef,
    Not,
    Pred,
    Term,
    Var,
)

_NOUNS = ("apple", "monkey", "quail", "raven", "book", "desk", "crow")
_VERBS = ("eat", "see", "chase", "hold")
_LABELS = ("a", "p", "q", "r", "b")
_VARS = ("x", "y", "z", "f", "g")


def _noun(rng: random.Random) -> Term:
    v = rng.choice(_VARS[:3])
    return Abs(v, Pred(rng.choice(_NOUNS), (Var(v),)))


def _verb(rng: random.Random) -> Term:
    x, y = rng.sample(_VARS[:3], 2)
    return Abs(x, Abs(y, Pred(rng.choice(_VERBS), (Var(y), Var(x)))))


def _negation(rng: random.Random) -> Term:
    x = rng.choice(_VARS[:3])
    return Abs("f", Abs(x, Not(App(Var("f"), Var(x)))))


def _copula() -> Term:
    return Abs("f", Var("f"))


def random_function(rng: random.Random, depth: int) -> Term:
    roll = rng.random()
    if roll < 0.25:
        return _noun(rng)
    if roll < 0.5:
        return _verb(rng)
    if roll < 0.6:
        return _copula()
    if roll < 0.7:
        return _negation(rng)
    if roll < 0.8:
        return Builtin(rng.choice(("identity", "negate")))
    if roll < 0.9 or depth >= 3:
        return App(_verb(rng), random_argument(rng, depth + 1))
    return App(_copula(), random_function(rng, depth + 1))


def random_argument(rng: random.Random, depth: int) -> Term:
    roll = rng.random()
    if depth >= 4 or roll < 0.35:
        return rng.choice([EntityRef(rng.choice(_LABELS)), Var(rng.choice(_VARS))])
    if roll < 0.6:
        return random_function(rng, depth + 1)
    return random_term(rng, depth + 1)


def random_term(rng: random.Random, depth: int = 0) -> Term:
    """Random combination of lexicon-template shapes."""
    roll = rng.random()
    if depth >= 4 or roll < 0.15:
        return random_argument(rng, depth + 1)
    if roll < 0.55:
        return App(random_function(rng, depth + 1), random_argument(rng, depth + 1))
    if roll < 0.7:
        v = rng.choice(_VARS)
        return Abs(v, random_term(rng, depth + 1))
    if roll < 0.8:
        return And(random_term(rng, depth + 1), random_term(rng, depth + 1))
    if roll < 0.9:
        return Not(random_term(rng, depth + 1))
    return App(_negation(rng), _noun(rng))
