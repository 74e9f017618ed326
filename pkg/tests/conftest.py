import random

import pytest

from fsli.discourse import Problem

BIRDS_EXAMPLE = Problem(
    premise=(
        "On a branch, there are three birds: a raven, a quail, and a crow. "
        "The quail is the leftmost. The raven is the rightmost.",
    ),
    question="What is true?",
    choices=(
        "The raven is the second from the left.",
        "The quail is the second from the left.",
        "The crow is the second from the left.",
    ),
    gold_index=2,
)

RANKING_EXAMPLE = Problem(
    premise=(
        "There are seven TV programs: H, J, L, P, Q, S, and V. "
        "J is less popular than H. L is less popular than H. "
        "J is more popular than Q. S is less popular than L. "
        "V is less popular than L. P is less popular than Q. "
        "S is less popular than Q. S is not seventh.",
    ),
    question="V is more popular than Q. J is less popular than L. What is true?",
    choices=(
        "H is less popular than Q.",
        "J is more popular than V.",
        "S is the most popular.",
    ),
    gold_index=1,
)


@pytest.fixture
def rng():
    return random.Random(20240801)


@pytest.fixture(scope="session")
def bb_task_dir(tmp_path_factory):
    from fsli.datagen import write_benchmark

    outdir = tmp_path_factory.mktemp("bb_tasks")
    write_benchmark(outdir)
    return outdir
