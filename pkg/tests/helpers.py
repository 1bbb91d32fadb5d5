"""Independent oracles and graph generators shared by the tests."""

import itertools
from math import gcd

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from pisdim.graph import Graph, is_connected


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_connected_graph(rng: np.random.Generator, n: int) -> Graph:
    while True:
        p = rng.uniform(0.15, 0.85)
        upper = np.triu(rng.random((n, n)) < p, 1)
        g = Graph.from_matrix(upper | upper.T)
        if is_connected(g):
            return g


def random_connected_graphs(count: int, max_n: int = 14, seed: int = 20261015) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, int(rng.integers(2, max_n + 1))) for _ in range(count)]


def zn_pis(modulus: int) -> nx.Graph:
    """PIS(Z_N) from the concrete divisor lattice: (a) + (b) = (gcd(a, b))."""
    divisors = [d for d in range(2, modulus) if modulus % d == 0]
    primes = {p for p in divisors if all(p % q for q in range(2, p))}
    h = nx.Graph()
    h.add_nodes_from(divisors)
    h.add_edges_from(
        (a, b) for a, b in itertools.combinations(divisors, 2) if gcd(a, b) in primes
    )
    return h


def brute_max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return k, sub
    return 0, ()


def brute_min_cover(g: Graph) -> tuple[int, tuple[int, ...]]:
    edges = g.edges()
    for k in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            s = set(sub)
            if all(u in s or v in s for u, v in edges):
                return k, sub
    raise AssertionError


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)
