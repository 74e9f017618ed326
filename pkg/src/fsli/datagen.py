"""Seeded generator for benchmark task files in the published ordering-task
JSON schema ({"examples": [{"input", "target_scores"}]}).

Each generated problem has a unique valid ordering (statements are kept
until the constraint set pins the hidden permutation), a preamble in the
published style, and exactly one deducible candidate statement. Useful
for exercising `fsli eval` at dataset scale when the original files are
not on disk; the loader reads real task files with the same code path.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from pathlib import Path

from .solver import Before, Constraint, Last, Position, constraint_holds

_NUM_WORDS = {3: "three", 5: "five", 7: "seven"}
_ORD_WORDS = {1: "first", 2: "second", 3: "third", 4: "fourth", 5: "fifth", 6: "sixth", 7: "seventh"}


@dataclass(frozen=True)
class Family:
    name: str
    header: str                  # format with {num} and {items}
    items: tuple[tuple[str, str], ...]  # (header NP, subject NP)
    copula: str
    rel_before: str              # format with {x}, {y}
    rel_after: str
    sup_first: str               # format with {x}
    sup_last: str
    pos_first: str               # format with {x}, {ord}; anchored at the front
    pos_last: str | None         # anchored at the back; None if unused
    choice_anchor: str           # "first" or "last": which template choices use


FAMILIES: tuple[Family, ...] = (
    Family(
        name="birds",
        header="On a branch, there are {num} birds: {items}.",
        items=tuple(
            (f"a {w}" if w[0] not in "aeiou" else f"an {w}", f"The {w}")
            for w in ("robin", "raven", "quail", "crow", "owl", "falcon", "hummingbird")
        ),
        copula="is",
        rel_before="{x} is to the left of {y}.",
        rel_after="{x} is to the right of {y}.",
        sup_first="{x} is the leftmost.",
        sup_last="{x} is the rightmost.",
        pos_first="{x} is the {ord} from the left.",
        pos_last="{x} is the {ord} from the right.",
        choice_anchor="first",
    ),
    Family(
        name="books",
        header="On a shelf, there are {num} books: {items}.",
        items=tuple(
            (f"a {c} book" if c[0] not in "aeiou" else f"an {c} book", f"The {c} book")
            for c in ("gray", "red", "purple", "blue", "black", "orange", "yellow")
        ),
        copula="is",
        rel_before="{x} is to the left of {y}.",
        rel_after="{x} is to the right of {y}.",
        sup_first="{x} is the leftmost.",
        sup_last="{x} is the rightmost.",
        pos_first="{x} is the {ord} from the left.",
        pos_last="{x} is the {ord} from the right.",
        choice_anchor="first",
    ),
    Family(
        name="golfers",
        header="In a golf tournament, there were {num} golfers: {items}.",
        items=tuple((n, n) for n in ("Amy", "Eli", "Eve", "Mel", "Ana", "Dan", "Mya")),
        copula="is",
        rel_before="{x} finished above {y}.",
        rel_after="{x} finished below {y}.",
        sup_first="{x} finished first.",
        sup_last="{x} finished last.",
        pos_first="{x} finished {ord}.",
        pos_last=None,
        choice_anchor="first",
    ),
    Family(
        name="fruits",
        header="In a fruit stand, there are {num} fruits: {items}.",
        items=tuple(
            (w, f"The {w}")
            for w in ("apples", "oranges", "peaches", "plums", "loquats", "kiwis", "pears")
        ),
        copula="are",
        rel_before="{x} are more expensive than {y}.",
        rel_after="{x} are less expensive than {y}.",
        sup_first="{x} are the most expensive.",
        sup_last="{x} are the cheapest.",
        pos_first="{x} are the {ord}-most expensive.",
        pos_last="{x} are the {ord}-cheapest.",
        choice_anchor="last",
    ),
    Family(
        name="vehicles",
        header="In an antique car show, there are {num} vehicles: {items}.",
        items=tuple(
            (f"a {w}" if w[0] not in "aeiou" else f"an {w}", f"The {w}")
            for w in ("convertible", "tractor", "hatchback", "minivan", "sedan", "limousine", "truck")
        ),
        copula="is",
        rel_before="{x} is older than {y}.",
        rel_after="{x} is newer than {y}.",
        sup_first="{x} is the oldest.",
        sup_last="{x} is the newest.",
        pos_first="{x} is the {ord}-oldest.",
        pos_last="{x} is the {ord}-newest.",
        choice_anchor="first",
    ),
    Family(
        name="speed",
        header="On a highway, there are {num} vehicles: {items}.",
        items=tuple(
            (f"a {w}", f"The {w}")
            for w in ("truck", "bus", "van", "tram", "scooter", "taxi", "jeep")
        ),
        copula="is",
        rel_before="{x} is faster than {y}.",
        rel_after="{x} is slower than {y}.",
        sup_first="{x} is the fastest.",
        sup_last="{x} is the slowest.",
        pos_first="{x} is the {ord}-fastest.",
        pos_last="{x} is the {ord}-slowest.",
        choice_anchor="first",
    ),
    Family(
        name="heights",
        header="In a class photo, there are {num} children: {items}.",
        items=tuple((n, n) for n in ("Emma", "Noah", "Ava", "Liam", "Mia", "Jack", "Zoe")),
        copula="is",
        rel_before="{x} is taller than {y}.",
        rel_after="{x} is shorter than {y}.",
        sup_first="{x} is the tallest.",
        sup_last="{x} is the shortest.",
        pos_first="{x} is the {ord}-tallest.",
        pos_last="{x} is the {ord}-shortest.",
        choice_anchor="first",
    ),
)

_PREAMBLE = (
    "The following paragraphs each describe a set of {num} objects arranged in a "
    "fixed order. The statements are logically consistent within each paragraph."
)


def _join_items(items: list[str]) -> str:
    if len(items) == 2:
        return f"{items[0]} and {items[1]}"
    return ", ".join(items[:-1]) + f", and {items[-1]}"


def _ordinal_phrase(k: int) -> str:
    return _ORD_WORDS[k]


@dataclass
class _Draft:
    sentences: list[str]
    constraints: list[Constraint]


def _position_sentence(fam: Family, subject: str, k: int, n: int, anchor: str) -> str:
    """Phrase "subject occupies front position k"; endpoints use superlatives."""
    if anchor == "last" and fam.pos_last is not None:
        k_back = n + 1 - k
        if k_back == 1:
            return fam.sup_last.format(x=subject)
        if k == 1:
            return fam.sup_first.format(x=subject)
        return fam.pos_last.format(x=subject, ord=_ordinal_phrase(k_back))
    if k == 1:
        return fam.sup_first.format(x=subject)
    if k == n:
        return fam.sup_last.format(x=subject)
    return fam.pos_first.format(x=subject, ord=_ordinal_phrase(k))


def _statement(rng: random.Random, fam: Family, subjects: list[str], target: list[int]) -> tuple[str, Constraint]:
    """One statement that is true of the hidden permutation."""
    n = len(subjects)
    labels = [f"e{i}" for i in range(n)]
    kind = rng.choices(("rel", "pos", "end"), weights=(6, 2, 2))[0]
    if kind == "rel" and n >= 2:
        i, j = rng.sample(range(n), 2)
        if target[i] < target[j]:
            if rng.random() < 0.5:
                return fam.rel_before.format(x=subjects[i], y=subjects[j]), Before(labels[i], labels[j])
            return fam.rel_after.format(x=subjects[j], y=subjects[i]), Before(labels[i], labels[j])
        if rng.random() < 0.5:
            return fam.rel_before.format(x=subjects[j], y=subjects[i]), Before(labels[j], labels[i])
        return fam.rel_after.format(x=subjects[i], y=subjects[j]), Before(labels[j], labels[i])
    if kind == "end":
        if rng.random() < 0.5:
            i = target.index(1)
            return fam.sup_first.format(x=subjects[i]), Position(labels[i], "first", 1)
        i = target.index(n)
        return fam.sup_last.format(x=subjects[i]), Last(labels[i])
    i = rng.randrange(n)
    k = target[i]
    anchor = "last" if (fam.pos_last is not None and rng.random() < 0.5) else "first"
    return _position_sentence(fam, subjects[i], k, n, anchor), Position(labels[i], "first", k)


def _draft_problem(rng: random.Random, fam: Family, n: int) -> dict:
    chosen = rng.sample(range(len(fam.items)), n)
    header_items = [fam.items[i][0] for i in chosen]
    subjects = [fam.items[i][1] for i in chosen]
    labels = [f"e{i}" for i in range(n)]
    perm = list(range(1, n + 1))
    rng.shuffle(perm)  # perm[i] = position of entity i

    sentences: list[str] = []
    seen: set[str] = set()
    # all candidate position maps; every accepted statement strictly shrinks this
    survivors = [
        {labels[i]: p[i] for i in range(n)} for p in itertools.permutations(range(1, n + 1))
    ]
    for _ in range(500):
        if len(survivors) == 1:
            break
        sentence, constraint = _statement(rng, fam, subjects, perm)
        if constraint.text() in seen:
            continue
        seen.add(constraint.text())
        keep = [pos for pos in survivors if constraint_holds(pos, constraint)]
        if len(keep) == len(survivors):
            continue  # redundant now, stays redundant as the set shrinks
        survivors = keep
        sentences.append(sentence)
    else:
        raise RuntimeError("could not pin a unique ordering")

    header = fam.header.format(num=_NUM_WORDS[n], items=_join_items(header_items))
    rng.shuffle(sentences)

    # candidate statements: one per entity about a single queried slot
    k = rng.randrange(1, n + 1)
    anchor = fam.choice_anchor if fam.pos_last is not None else "first"
    order = list(range(n))
    rng.shuffle(order)
    choices = [_position_sentence(fam, subjects[i], k, n, anchor) for i in order]
    gold_index = order.index(perm.index(k))

    input_text = " ".join([_PREAMBLE.format(num=_NUM_WORDS[n]), header] + sentences)
    target_scores = {c: (1 if i == gold_index else 0) for i, c in enumerate(choices)}
    return {"input": input_text, "target_scores": target_scores}


def generate_task(n_entities: int, n_problems: int, seed: int) -> dict:
    rng = random.Random(seed)
    examples = []
    for i in range(n_problems):
        fam = FAMILIES[i % len(FAMILIES)]
        examples.append(_draft_problem(rng, fam, n_entities))
    return {
        "name": f"ordering_deduction_{n_entities}_objects",
        "examples": examples,
    }


def write_benchmark(outdir: str | Path, seed: int = 20240801) -> dict[str, Path]:
    """Write the three task files (300/500/700 problems at n=3/5/7)."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sizes = {3: 300, 5: 500, 7: 700}
    paths: dict[str, Path] = {}
    for n, count in sizes.items():
        task = generate_task(n, count, seed + n)
        path = outdir / f"task_{n}_objects.json"
        path.write_text(json.dumps(task, indent=1), encoding="utf-8")
        paths[f"bb{n}"] = path
    return paths


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "bb_tasks"
    for name, p in write_benchmark(target).items():
        print(f"{name}: {p}")
