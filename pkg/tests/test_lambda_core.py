import random

import pytest

from fsli.lambda_core import (
    ANY,
    ANY_FUN,
    ENTITY,
    ENTITY_CREATION,
    PREDICATE,
    TRUTH,
    Abs,
    And,
    App,
    Builtin,
    Denotation,
    EntityRef,
    Fun,
    Not,
    Pred,
    ReductionLimitError,
    TypeMismatchError,
    Var,
    alpha_equal,
    alpha_rename,
    beta_reduce,
    binders_unique,
    free_vars,
    predicate_modify,
    result_type,
    term_text,
    type_compatible,
)
from term_gen import random_term


class TestTypeCompatible:
    def test_article_type_takes_predicate(self):
        assert type_compatible(Fun(PREDICATE, ENTITY), PREDICATE)

    def test_cross_categorial_takes_transitive_verb(self):
        assert type_compatible(Fun(ANY, ANY), Fun(ENTITY, PREDICATE))

    def test_entity_cannot_apply(self):
        assert not type_compatible(ENTITY, ENTITY)

    def test_function_placeholder_takes_any_function(self):
        assert type_compatible(Fun(ANY_FUN, ANY), PREDICATE)
        assert not type_compatible(Fun(ANY_FUN, ANY), ENTITY)

    def test_entity_creation_result_needs_exact_predicate(self):
        propernoun = Fun(PREDICATE, ENTITY_CREATION)
        assert type_compatible(propernoun, PREDICATE)
        assert not type_compatible(propernoun, Fun(ENTITY, ENTITY))

    def test_result_types(self):
        assert result_type(Fun(ANY, ANY), PREDICATE) == PREDICATE
        assert result_type(Fun(PREDICATE, ENTITY_CREATION), PREDICATE) == ENTITY
        assert result_type(Fun(ANY_FUN, ANY), Fun(ENTITY, PREDICATE)) == PREDICATE
        assert result_type(Fun(ENTITY, TRUTH), ENTITY) == TRUTH


class TestBetaReduce:
    def test_identity_on_entity(self):
        term = App(Abs("x", Var("x")), EntityRef("a"))
        assert beta_reduce(term) == EntityRef("a")

    def test_copula_returns_verb_unchanged(self):
        eating = Abs("x", Pred("eat", (Var("y"), Var("x"))))
        term = App(Abs("f", Var("f")), eating)
        assert beta_reduce(term) == eating

    def test_saturating_a_predicate(self):
        fun = Abs("y", Pred("eat", (Var("y"), EntityRef("a"))))
        term = App(fun, EntityRef("p"))
        assert beta_reduce(term) == Pred("eat", (EntityRef("p"), EntityRef("a")))

    def test_builtin_identity_and_negate(self):
        assert beta_reduce(App(Builtin("identity"), EntityRef("a"))) == EntityRef("a")
        assert beta_reduce(App(Builtin("negate"), Pred("tall", (EntityRef("a"),)))) == Not(
            Pred("tall", (EntityRef("a"),))
        )

    def test_capture_avoidance(self):
        # (λx. λy. x) y  ->  λy'. y  with the free y NOT captured
        term = App(Abs("x", Abs("y", Var("x"))), Var("y"))
        out = beta_reduce(term)
        assert isinstance(out, Abs)
        assert out.body == Var("y")
        assert out.param != "y"

    def test_step_bound_raises(self):
        # not constructible from templates, but the bound must trip loudly
        omega = Abs("x", App(Var("x"), Var("x")))
        with pytest.raises(ReductionLimitError):
            beta_reduce(App(omega, omega), limit=50)

    def test_normal_form_is_returned_unchanged(self):
        term = Pred("eat", (EntityRef("p"), EntityRef("a")))
        assert beta_reduce(term) is term


class TestPredicateModify:
    def test_pink_monkey_conjunction_shape(self):
        pink = Denotation(Abs("x", Pred("pink", (Var("x"),))), PREDICATE)
        monkey = Denotation(Abs("x", Pred("monkey", (Var("x"),))), PREDICATE)
        out = predicate_modify(pink, monkey)
        assert out.semtype == PREDICATE
        expected = Abs("v", And(Pred("pink", (Var("v"),)), Pred("monkey", (Var("v"),))))
        assert alpha_equal(out.term, expected)

    def test_self_modification_keeps_type(self):
        tasty = Denotation(Abs("x", Pred("tasty", (Var("x"),))), PREDICATE)
        out = predicate_modify(tasty, tasty)
        assert out.semtype == PREDICATE
        assert alpha_equal(
            out.term,
            Abs("v", And(Pred("tasty", (Var("v"),)), Pred("tasty", (Var("v"),)))),
        )

    def test_conjunction_against_toy_model(self):
        # two-entity model where exactly one entity satisfies both conjuncts
        extension = {"green": {"g"}, "apple": {"g", "r"}}

        def oracle(term, label):
            saturated = beta_reduce(App(term, EntityRef(label)))

            def ev(t):
                if isinstance(t, And):
                    return ev(t.left) and ev(t.right)
                if isinstance(t, Pred):
                    return t.args[0].label in extension[t.name]
                raise AssertionError(t)

            return ev(saturated)

        green = Denotation(Abs("x", Pred("green", (Var("x"),))), PREDICATE)
        apple = Denotation(Abs("x", Pred("apple", (Var("x"),))), PREDICATE)
        combined = predicate_modify(green, apple)
        assert oracle(combined.term, "g") is True
        assert oracle(combined.term, "r") is False

    def test_argument_order_left_conjunct_first(self):
        left = Denotation(Abs("x", Pred("first_one", (Var("x"),))), PREDICATE)
        right = Denotation(Abs("x", Pred("second_one", (Var("x"),))), PREDICATE)
        saturated = beta_reduce(App(predicate_modify(left, right).term, EntityRef("e")))
        assert saturated == And(
            Pred("first_one", (EntityRef("e"),)), Pred("second_one", (EntityRef("e"),))
        )

    def test_type_mismatch(self):
        entity = Denotation(EntityRef("a"), ENTITY)
        pred = Denotation(Abs("x", Pred("tall", (Var("x"),))), PREDICATE)
        with pytest.raises(TypeMismatchError):
            predicate_modify(entity, pred)


class TestProperties:
    N = 2000

    def test_idempotent_alpha_invariant_capture_free(self):
        rng = random.Random(11)
        for _ in range(self.N):
            term = random_term(rng)
            nf = beta_reduce(term)
            assert beta_reduce(nf) == nf, term_text(term)
            variant = alpha_rename(term)
            assert alpha_equal(beta_reduce(variant), nf), term_text(term)
            assert free_vars(nf) <= free_vars(term), term_text(term)

    def test_normal_forms_have_unique_binders(self):
        rng = random.Random(13)
        for _ in range(500):
            nf = beta_reduce(random_term(rng))
            assert binders_unique(nf)


def test_term_text_examples():
    assert term_text(Pred("position", (Var("x"), Pred("first"), Pred("1")))) == "position(x, first, 1)"
    assert term_text(Not(Pred("last", (EntityRef("r"),)))) == "not_(last(r))"
    assert term_text(And(Pred("pink", (Var("p"),)), Pred("monkey", (Var("p"),)))) == "pink(p) and monkey(p)"
