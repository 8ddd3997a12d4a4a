import random

import pytest

from tricliq import Graph, load_fixture


def gnp(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n,p): include each pair independently with probability p."""
    rng = random.Random(seed)
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, pairs)


@pytest.fixture(scope="session")
def g1():
    return load_fixture("g1")


@pytest.fixture(scope="session")
def g2():
    return load_fixture("g2")


@pytest.fixture(scope="session")
def g3():
    return load_fixture("g3")


@pytest.fixture(scope="session")
def g4():
    return load_fixture("g4")


@pytest.fixture(scope="session")
def turan13():
    return load_fixture("turan13")


@pytest.fixture(scope="session")
def moon_moser_12():
    return load_fixture("moon_moser_12")
