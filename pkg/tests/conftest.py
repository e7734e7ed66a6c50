import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hamsq.core import Graph, build_graph

settings.register_profile(
    "pkg",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pkg")


@st.composite
def graphs(draw, min_order=0, max_order=12):
    """Random graph strategy: order then an arbitrary subset of pairs."""
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240811)
