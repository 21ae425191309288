"""Shared oracles and graph builders.

``brute_max_clique`` enumerates all 2^n vertex subsets with bitmask
adjacency checks; it is the independent reference the branch-and-bound
oracle is validated against, and stays usable up to n ~ 16.
"""

from datetime import timedelta

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from cliquesplit import Graph, gnp_random

settings.register_profile(
    "default", max_examples=50, deadline=timedelta(seconds=20), derandomize=True
)
settings.load_profile("default")


def brute_max_clique(g: Graph) -> int:
    """Maximum clique size by exhaustive subset enumeration (n <= 16)."""
    n = g.num_vertices
    assert n <= 16, "exhaustive oracle capped at 16 vertices"
    adj = [0] * n
    for v in range(n):
        for u in g.neighbors(v):
            adj[v] |= 1 << u
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        rest = mask
        ok = True
        while rest:
            bit = rest & -rest
            v = bit.bit_length() - 1
            if mask & ~(adj[v] | bit):
                ok = False
                break
            rest ^= bit
        if ok:
            best = size
    return best


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Hub 0 plus ``leaves`` pendant vertices."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel5() -> Graph:
    """Hub 0 joined to the 4-cycle 1-2-3-4."""
    rim = [(1, 2), (2, 3), (3, 4), (1, 4)]
    return Graph(5, rim + [(0, i) for i in range(1, 5)])


random_graphs = st.builds(
    gnp_random,
    n=st.integers(min_value=1, max_value=14),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2**32),
)


@pytest.fixture
def k5():
    return complete_graph(5)
