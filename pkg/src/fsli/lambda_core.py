"""Typed first-order lambda terms and capture-avoiding normalization.

Denotations pair a term with a semantic type. Types are `e` (entity),
`t` (truth value), functions between types, two cross-categorial
placeholders (any type / any function type), and the entity-creating
result type carried by proper-noun denotations.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class TypeMismatchError(TypeError):
    pass


class ReductionLimitError(RuntimeError):
    """Raised when normalization exceeds the configured step bound."""


# ---------------------------------------------------------------------------
# semantic types


class SemType:
    __slots__ = ()

    def text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Entity(SemType):
    def text(self) -> str:
        return "e"


@dataclass(frozen=True)
class Truth(SemType):
    def text(self) -> str:
        return "t"


@dataclass(frozen=True)
class AnyType(SemType):
    """Placeholder that unifies with every type (cross-categorial)."""

    def text(self) -> str:
        return "any"


@dataclass(frozen=True)
class AnyFunction(SemType):
    """Placeholder that unifies with every function type."""

    def text(self) -> str:
        return "anyfun"


@dataclass(frozen=True)
class EntityCreation(SemType):
    """Result type of denotations that mint a context entity when applied."""

    def text(self) -> str:
        return "ec"


@dataclass(frozen=True)
class Fun(SemType):
    domain: SemType
    result: SemType

    def text(self) -> str:
        return f"<{self.domain.text()},{self.result.text()}>"


ENTITY = Entity()
TRUTH = Truth()
ANY = AnyType()
ANY_FUN = AnyFunction()
ENTITY_CREATION = EntityCreation()
PREDICATE = Fun(ENTITY, TRUTH)  # <e,t>, the workhorse type


def _unifies(domain: SemType, arg: SemType) -> bool:
    if isinstance(domain, AnyType):
        return True
    if isinstance(domain, AnyFunction):
        return isinstance(arg, Fun)
    if isinstance(domain, Fun) and isinstance(arg, Fun):
        return _unifies(domain.domain, arg.domain) and _unifies(domain.result, arg.result)
    return domain == arg


def type_compatible(funtype: SemType, argtype: SemType) -> bool:
    """True iff a denotation of ``funtype`` can consume one of ``argtype``."""
    if not isinstance(funtype, Fun):
        return False
    if isinstance(funtype.result, EntityCreation):
        return argtype == PREDICATE
    return _unifies(funtype.domain, argtype)


def result_type(funtype: Fun, argtype: SemType) -> SemType:
    """Type after application, resolving placeholder and entity-creating results."""
    res = funtype.result
    if isinstance(res, AnyType):
        if isinstance(funtype.domain, AnyFunction) and isinstance(argtype, Fun):
            return argtype.result
        return argtype
    if isinstance(res, EntityCreation):
        return ENTITY
    return res


# ---------------------------------------------------------------------------
# terms


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Abs(Term):
    param: str
    body: Term


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True)
class Pred(Term):
    """Predicate application; with no args it acts as a symbolic constant."""

    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class And(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Term):
    inner: Term


@dataclass(frozen=True)
class EntityRef(Term):
    label: str


@dataclass(frozen=True)
class ListOf(Term):
    items: tuple[Term, ...]


BUILTIN_KINDS = ("createEntity", "getEntity", "identity", "negate")


@dataclass(frozen=True)
class Builtin(Term):
    kind: str
    payload: Term | None = None

    def __post_init__(self):
        if self.kind not in BUILTIN_KINDS:
            raise ValueError(f"unknown builtin kind {self.kind!r}")


@dataclass(frozen=True)
class Denotation:
    term: Term
    semtype: SemType

    def text(self) -> str:
        return f"{term_text(self.term)} : {self.semtype.text()}"


# ---------------------------------------------------------------------------
# traversal helpers


def _children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, Abs):
        return (t.body,)
    if isinstance(t, App):
        return (t.fun, t.arg)
    if isinstance(t, Pred):
        return t.args
    if isinstance(t, And):
        return (t.left, t.right)
    if isinstance(t, Not):
        return (t.inner,)
    if isinstance(t, ListOf):
        return t.items
    if isinstance(t, Builtin) and t.payload is not None:
        return (t.payload,)
    return ()


def _rebuild(t: Term, kids: tuple[Term, ...]) -> Term:
    if isinstance(t, Abs):
        return Abs(t.param, kids[0])
    if isinstance(t, App):
        return App(kids[0], kids[1])
    if isinstance(t, Pred):
        return Pred(t.name, kids)
    if isinstance(t, And):
        return And(kids[0], kids[1])
    if isinstance(t, Not):
        return Not(kids[0])
    if isinstance(t, ListOf):
        return ListOf(kids)
    if isinstance(t, Builtin):
        return Builtin(t.kind, kids[0] if kids else None)
    return t


def free_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.param}
    out: frozenset[str] = frozenset()
    for c in _children(t):
        out |= free_vars(c)
    return out


def _all_names(t: Term) -> set[str]:
    names: set[str] = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Var):
            names.add(cur.name)
        elif isinstance(cur, Abs):
            names.add(cur.param)
        stack.extend(_children(cur))
    return names


def binder_names(t: Term) -> list[str]:
    out: list[str] = []
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Abs):
            out.append(cur.param)
        stack.extend(_children(cur))
    return out


def binders_unique(t: Term) -> bool:
    names = binder_names(t)
    return len(names) == len(set(names))


class NameSupply:
    """Monotone fresh-name source; deterministic within one derivation."""

    def __init__(self, taken: set[str] | None = None):
        self._taken = set(taken or ())
        self._counter = 0

    def reserve(self, t: Term) -> None:
        self._taken |= _all_names(t)

    def fresh(self, base: str = "x") -> str:
        base = base.rstrip("0123456789") or "x"
        while True:
            self._counter += 1
            name = f"{base}{self._counter}"
            if name not in self._taken:
                self._taken.add(name)
                return name


def substitute(t: Term, name: str, repl: Term, supply: NameSupply) -> Term:
    """Capture-avoiding substitution of ``repl`` for free ``name`` in ``t``."""
    if isinstance(t, Var):
        return repl if t.name == name else t
    if isinstance(t, Abs):
        if t.param == name:
            return t
        if t.param in free_vars(repl) and name in free_vars(t.body):
            renamed = supply.fresh(t.param)
            body = substitute(t.body, t.param, Var(renamed), supply)
            return Abs(renamed, substitute(body, name, repl, supply))
        return Abs(t.param, substitute(t.body, name, repl, supply))
    kids = _children(t)
    if not kids:
        return t
    return _rebuild(t, tuple(substitute(c, name, repl, supply) for c in kids))


def alpha_rename(t: Term, supply: NameSupply | None = None) -> Term:
    """Rename so every binder in the term is globally unique."""
    supply = supply or NameSupply(_all_names(t))

    def go(term: Term, env: dict[str, str]) -> Term:
        if isinstance(term, Var):
            return Var(env.get(term.name, term.name))
        if isinstance(term, Abs):
            fresh = supply.fresh(term.param)
            inner = dict(env)
            inner[term.param] = fresh
            return Abs(fresh, go(term.body, inner))
        kids = _children(term)
        if not kids:
            return term
        return _rebuild(term, tuple(go(c, env) for c in kids))

    return go(t, {})


def _has_redex(t: Term) -> bool:
    if isinstance(t, App):
        if isinstance(t.fun, Abs):
            return True
        if isinstance(t.fun, Builtin) and t.fun.kind in ("identity", "negate"):
            return True
    return any(_has_redex(c) for c in _children(t))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise ReductionLimitError("beta reduction exceeded step bound")


DEFAULT_STEP_LIMIT = 10_000


def beta_reduce(t: Term, limit: int = DEFAULT_STEP_LIMIT) -> Term:
    """Normal-order (leftmost-outermost) beta normal form.

    Idempotent: terms already in normal form with unique binders are
    returned unchanged, so re-normalizing is structurally the identity.
    """
    if not _has_redex(t) and binders_unique(t):
        return t
    supply = NameSupply(_all_names(t))
    budget = _Budget(limit)

    def whnf(term: Term) -> Term:
        if isinstance(term, App):
            fun = whnf(term.fun)
            if isinstance(fun, Abs):
                budget.spend()
                return whnf(substitute(fun.body, fun.param, term.arg, supply))
            if isinstance(fun, Builtin):
                if fun.kind == "identity":
                    budget.spend()
                    return whnf(term.arg)
                if fun.kind == "negate":
                    budget.spend()
                    return Not(term.arg)
            return App(fun, term.arg)
        return term

    def norm(term: Term) -> Term:
        budget.spend()
        if isinstance(term, App):
            head = whnf(term)
            if not isinstance(head, App):
                return norm(head)
            return App(norm(head.fun), norm(head.arg))
        kids = _children(term)
        if not kids:
            return term
        return _rebuild(term, tuple(norm(c) for c in kids))

    out = norm(t)
    if not binders_unique(out):
        out = alpha_rename(out, supply)
    return out


def alpha_equal(a: Term, b: Term) -> bool:
    """Structural equality modulo bound-variable names."""

    def go(x: Term, y: Term, env: tuple[tuple[str, str], ...]) -> bool:
        if type(x) is not type(y):
            return False
        if isinstance(x, Var):
            for xa, yb in reversed(env):
                if x.name == xa or y.name == yb:
                    return x.name == xa and y.name == yb
            return x.name == y.name
        if isinstance(x, Abs):
            return go(x.body, y.body, env + ((x.param, y.param),))
        if isinstance(x, Pred) and x.name != y.name:
            return False
        if isinstance(x, EntityRef):
            return x.label == y.label
        if isinstance(x, Builtin) and x.kind != y.kind:
            return False
        xk, yk = _children(x), _children(y)
        return len(xk) == len(yk) and all(go(c, d, env) for c, d in zip(xk, yk))

    return go(a, b, ())


def predicate_modify(y: Denotation, z: Denotation, supply: NameSupply | None = None) -> Denotation:
    """Conjoin two <e,t> denotations into one (left conjunct from ``y``)."""
    if y.semtype != PREDICATE or z.semtype != PREDICATE:
        raise TypeMismatchError(
            f"predicate modification needs <e,t> on both sides, "
            f"got {y.semtype.text()} and {z.semtype.text()}"
        )
    if supply is None:
        supply = NameSupply()
    supply.reserve(y.term)
    supply.reserve(z.term)
    x = supply.fresh("x")
    body = And(
        beta_reduce(App(y.term, Var(x))),
        beta_reduce(App(z.term, Var(x))),
    )
    return Denotation(Abs(x, body), PREDICATE)


# ---------------------------------------------------------------------------
# rendering


def term_text(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, EntityRef):
        return t.label
    if isinstance(t, Abs):
        return f"λ{t.param}. {term_text(t.body)}"
    if isinstance(t, App):
        return f"{_atom_text(t.fun)}({term_text(t.arg)})"
    if isinstance(t, Pred):
        if not t.args:
            return t.name
        return f"{t.name}({', '.join(term_text(a) for a in t.args)})"
    if isinstance(t, And):
        return f"{term_text(t.left)} and {term_text(t.right)}"
    if isinstance(t, Not):
        return f"not_({term_text(t.inner)})"
    if isinstance(t, ListOf):
        return f"[{', '.join(term_text(i) for i in t.items)}]"
    if isinstance(t, Builtin):
        if t.payload is None:
            return t.kind
        return f"{t.kind}[{term_text(t.payload)}]"
    raise TypeError(f"not a term: {t!r}")


def _atom_text(t: Term) -> str:
    s = term_text(t)
    if isinstance(t, (Abs, And)):
        return f"({s})"
    return s
