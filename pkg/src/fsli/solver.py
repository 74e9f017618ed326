"""Finite-domain ordering engine.

Entities occupy positions 1..n (a permutation). Constraints are the
ordering atoms before/succeed/first/last/position plus negation, and a
query is decided against the set of valid orderings under one of three
modes: holds somewhere, holds everywhere, holds nowhere.

`valid_orderings` prunes with slot/bound propagation; `brute_force_orderings`
filters all n! permutations and exists so the two can be checked against
each other.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence


class UnknownLabelError(LookupError):
    pass


class ModelError(ValueError):
    pass


class UnsatisfiableModelWarning(UserWarning):
    pass


class QueryMode(Enum):
    COULD_BE_TRUE = "could"
    MUST_BE_TRUE = "must"
    CANNOT_BE_TRUE = "cannot"


class Constraint:
    __slots__ = ()

    def labels(self) -> frozenset[str]:
        raise NotImplementedError

    def text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Before(Constraint):
    a: str
    b: str

    def labels(self):
        return frozenset((self.a, self.b))

    def text(self):
        return f"before({self.a},{self.b})"


@dataclass(frozen=True)
class Succeed(Constraint):
    """a sits in the slot immediately after b: pos(a) = pos(b) + 1."""

    a: str
    b: str

    def labels(self):
        return frozenset((self.a, self.b))

    def text(self):
        return f"succeed({self.a},{self.b})"


@dataclass(frozen=True)
class First(Constraint):
    a: str

    def labels(self):
        return frozenset((self.a,))

    def text(self):
        return f"first({self.a})"


@dataclass(frozen=True)
class Last(Constraint):
    a: str

    def labels(self):
        return frozenset((self.a,))

    def text(self):
        return f"last({self.a})"


@dataclass(frozen=True)
class Position(Constraint):
    a: str
    anchor: str  # "first" or "last"
    k: int

    def __post_init__(self):
        if self.anchor not in ("first", "last"):
            raise ModelError(f"position anchor must be first/last, got {self.anchor!r}")
        if self.k < 1:
            raise ModelError("position index must be positive")

    def labels(self):
        return frozenset((self.a,))

    def text(self):
        return f"position({self.a},{self.anchor},{self.k})"


@dataclass(frozen=True)
class Not(Constraint):
    inner: Constraint

    def labels(self):
        return self.inner.labels()

    def text(self):
        return f"not_({self.inner.text()})"


# an ordering is the tuple of labels sorted by position: labels[i] is at i+1
Ordering = tuple[str, ...]


def positions_of(ordering: Sequence[str]) -> dict[str, int]:
    return {label: i + 1 for i, label in enumerate(ordering)}


@dataclass(frozen=True)
class OrderModel:
    entities: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if not self.entities:
            raise ModelError("model needs at least one entity")
        if len(set(self.entities)) != len(self.entities):
            raise ModelError("entities must be distinct")
        known = set(self.entities)
        n = len(self.entities)
        for c in self.constraints:
            missing = c.labels() - known
            if missing:
                raise UnknownLabelError(f"constraint {c.text()} uses unknown {sorted(missing)}")
            _check_shape(c, n)


def _check_shape(c: Constraint, n: int) -> None:
    if isinstance(c, (Before, Succeed)) and c.a == c.b:
        raise ModelError(f"binary atom over a single entity: {c.text()}")
    if isinstance(c, Position) and c.k > n:
        raise ModelError(f"position index beyond domain: {c.text()}")
    if isinstance(c, Not):
        _check_shape(c.inner, n)


def constraint_holds(ordering: Sequence[str] | Mapping[str, int], c: Constraint) -> bool:
    pos = ordering if isinstance(ordering, Mapping) else positions_of(ordering)
    return _holds(pos, len(pos), c)


def _holds(pos: Mapping[str, int], n: int, c: Constraint) -> bool:
    try:
        if isinstance(c, Before):
            return pos[c.a] < pos[c.b]
        if isinstance(c, Succeed):
            return pos[c.a] == pos[c.b] + 1
        if isinstance(c, First):
            return pos[c.a] == 1
        if isinstance(c, Last):
            return pos[c.a] == n
        if isinstance(c, Position):
            want = c.k if c.anchor == "first" else n + 1 - c.k
            return pos[c.a] == want
        if isinstance(c, Not):
            return not _holds(pos, n, c.inner)
    except KeyError as exc:
        raise UnknownLabelError(f"label {exc.args[0]!r} not in ordering") from exc
    raise ModelError(f"unknown constraint {c!r}")


def brute_force_orderings(model: OrderModel) -> set[Ordering]:
    """Independent oracle: filter every permutation, no pruning."""
    n = len(model.entities)
    out: set[Ordering] = set()
    for perm in itertools.permutations(model.entities):
        pos = {label: i + 1 for i, label in enumerate(perm)}
        if all(_holds(pos, n, c) for c in model.constraints):
            out.add(perm)
    return out


def _propagate_domains(model: OrderModel) -> dict[str, set[int]] | None:
    n = len(model.entities)
    domains: dict[str, set[int]] = {e: set(range(1, n + 1)) for e in model.entities}

    def fix(label: str, value: int) -> bool:
        domains[label] &= {value}
        return bool(domains[label])

    def drop(label: str, value: int) -> bool:
        domains[label].discard(value)
        return bool(domains[label])

    befores: list[tuple[str, str]] = []
    succeeds: list[tuple[str, str]] = []
    for c in model.constraints:
        ok = True
        if isinstance(c, First):
            ok = fix(c.a, 1)
        elif isinstance(c, Last):
            ok = fix(c.a, n)
        elif isinstance(c, Position):
            ok = fix(c.a, c.k if c.anchor == "first" else n + 1 - c.k)
        elif isinstance(c, Before):
            befores.append((c.a, c.b))
        elif isinstance(c, Succeed):
            succeeds.append((c.a, c.b))
        elif isinstance(c, Not):
            inner = c.inner
            if isinstance(inner, First):
                ok = drop(inner.a, 1)
            elif isinstance(inner, Last):
                ok = drop(inner.a, n)
            elif isinstance(inner, Position):
                ok = drop(inner.a, inner.k if inner.anchor == "first" else n + 1 - inner.k)
            elif isinstance(inner, Before):
                befores.append((inner.b, inner.a))  # distinct labels: not(a<b) = b<a
        if not ok:
            return None

    # bound tightening to a fixpoint; sound reductions only
    changed = True
    while changed:
        changed = False
        for a, b in befores:
            if not domains[a] or not domains[b]:
                return None
            hi_b, lo_a = max(domains[b]), min(domains[a])
            too_high = [v for v in domains[a] if v >= hi_b]
            too_low = [v for v in domains[b] if v <= lo_a]
            for v in too_high:
                domains[a].discard(v)
            for v in too_low:
                domains[b].discard(v)
            if too_high or too_low:
                changed = True
            if not domains[a] or not domains[b]:
                return None
        for a, b in succeeds:
            if not domains[a] or not domains[b]:
                return None
            allowed_a = {v + 1 for v in domains[b]} & domains[a]
            allowed_b = {v - 1 for v in domains[a]} & domains[b]
            if allowed_a != domains[a]:
                domains[a] = allowed_a
                changed = True
            if allowed_b != domains[b]:
                domains[b] = allowed_b
                changed = True
            if not domains[a] or not domains[b]:
                return None
    return domains


def valid_orderings(model: OrderModel) -> set[Ordering]:
    """All permutations satisfying every constraint (set-equal to the oracle)."""
    n = len(model.entities)
    domains = _propagate_domains(model)
    if domains is None:
        return set()

    # index binary constraints for early checking during search
    by_label: dict[str, list[Constraint]] = {e: [] for e in model.entities}
    for c in model.constraints:
        for label in c.labels():
            by_label[label].append(c)

    order = sorted(model.entities, key=lambda e: len(domains[e]))
    assignment: dict[str, int] = {}
    used: set[int] = set()
    results: set[Ordering] = set()

    def ready(c: Constraint) -> bool:
        return all(label in assignment for label in c.labels())

    def search(i: int) -> None:
        if i == n:
            pos = dict(assignment)
            if all(_holds(pos, n, c) for c in model.constraints):
                slots = [""] * n
                for label, p in pos.items():
                    slots[p - 1] = label
                results.add(tuple(slots))
            return
        label = order[i]
        for value in sorted(domains[label] - used):
            assignment[label] = value
            used.add(value)
            if all(_holds(assignment, n, c) for c in by_label[label] if ready(c)):
                search(i + 1)
            used.discard(value)
            del assignment[label]

    search(0)
    return results


def eval_query(
    model: OrderModel,
    query: Constraint,
    mode: QueryMode,
    orderings: Iterable[Ordering] | None = None,
) -> bool:
    """Decide a candidate statement against the model's valid orderings."""
    missing = query.labels() - set(model.entities)
    if missing:
        raise UnknownLabelError(f"query {query.text()} uses unknown {sorted(missing)}")
    valid = list(orderings) if orderings is not None else list(valid_orderings(model))
    n = len(model.entities)
    if not valid:
        warnings.warn(
            "premises admit no valid ordering; cannot-be-true holds vacuously",
            UnsatisfiableModelWarning,
            stacklevel=2,
        )
        return mode is QueryMode.CANNOT_BE_TRUE
    answers = [_holds(positions_of(o), n, query) for o in valid]
    if mode is QueryMode.COULD_BE_TRUE:
        return any(answers)
    if mode is QueryMode.MUST_BE_TRUE:
        return all(answers)
    return not any(answers)


def ordering_text(ordering: Ordering) -> str:
    return " < ".join(ordering)
