import random

import pytest

from reglab import IdealFamily, RingContext, minimalize
from reglab.fixtures import example1_family, example2_family


@pytest.fixture(scope="session")
def ex1():
    return example1_family()


@pytest.fixture(scope="session")
def ex2():
    return example2_family()


def random_ideal(rng, n, max_gens=6, max_exp=4):
    ring = RingContext.standard(n)
    k = rng.randint(1, max_gens)
    gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
    gens = [g for g in gens if any(g)] or [tuple(1 if i == 0 else 0 for i in range(n))]
    return minimalize(gens, ring)


def random_corpus(count=50, seed=20240601):
    rng = random.Random(seed)
    return [random_ideal(rng, rng.randint(1, 3)) for _ in range(count)]


def monomials_of_degree(n, d):
    if n == 1:
        return [(d,)]
    return [(i,) + rest for i in range(d + 1) for rest in monomials_of_degree(n - 1, d - i)]


def random_equigenerated_family(rng):
    n = rng.choice([1, 2, 3, 3])
    m = rng.choice([1, 2, 2])
    ring = RingContext.standard(n)
    ideals = []
    for _ in range(m):
        d = rng.randint(1, 3)
        pool = monomials_of_degree(n, d)
        gens = rng.sample(pool, rng.randint(min(2, len(pool)), min(5, len(pool))))
        ideals.append(minimalize(gens, ring))
    return IdealFamily(ring, tuple(ideals))


def random_families(count=20, seed=77):
    rng = random.Random(seed)
    return [random_equigenerated_family(rng) for _ in range(count)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
