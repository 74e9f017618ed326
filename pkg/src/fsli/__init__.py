"""fsli: compositional semantic parsing plus finite-domain deduction for
one-dimensional ordering word problems."""

from .composer import Context, compose_sentence
from .discourse import Problem, classify_question, compose_paragraph, compose_problem
from .harness import evaluate, load_bigbench, load_canonical, solve
from .lambda_core import Denotation, beta_reduce, predicate_modify, type_compatible
from .lexicon import AnnotatedToken, denote_word
from .preprocess import bb_parse, lemmatize, normalize_phrases, rewrite_conditionals
from .solver import OrderModel, QueryMode, constraint_holds, eval_query, valid_orderings
from .trees import SentenceParse, binarize_cnf, read_annotated_tree

__all__ = [
    "AnnotatedToken",
    "Context",
    "Denotation",
    "OrderModel",
    "Problem",
    "QueryMode",
    "SentenceParse",
    "bb_parse",
    "beta_reduce",
    "binarize_cnf",
    "classify_question",
    "compose_paragraph",
    "compose_problem",
    "compose_sentence",
    "constraint_holds",
    "denote_word",
    "eval_query",
    "evaluate",
    "lemmatize",
    "load_bigbench",
    "load_canonical",
    "normalize_phrases",
    "predicate_modify",
    "read_annotated_tree",
    "rewrite_conditionals",
    "solve",
    "type_compatible",
    "valid_orderings",
]

__version__ = "0.1.0"
