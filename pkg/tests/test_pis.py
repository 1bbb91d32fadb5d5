import itertools
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pisdim.graph import diameter, is_connected
from pisdim.pis import EmptyGraphError, build_pis, is_disconnected_case, to_dot, write_dot
from pisdim.rings import RingSpec, ideal_sum, is_prime_ideal, parse_ring_spec

from .helpers import to_nx, zn_pis


@pytest.mark.parametrize(
    "factors, vertices, edges",
    # edge counts from exhaustive pairwise checking over the ideal vectors,
    # cross-checked against the concrete divisor lattices of Z_30 and Z_36
    [((1, 1, 1), 6, 9), ((2, 2), 7, 12), ((3, 3), 14, 32)],
)
def test_sizes(factors, vertices, edges):
    g = build_pis(factors)
    assert (g.n, g.edge_count) == (vertices, edges)


@pytest.mark.parametrize(
    "ring, modulus",
    [("F x F x F", 30), ("Z(4) x Z(9)", 36), ("Z(8) x Z(27)", 216), ("Z(4) x F", 12),
     ("Z(2) x Z(3) x Z(5) x Z(7)", 210), ("Z(4) x Z(3) x Z(5)", 60), ("Z(16) x Z(3)", 48)],
)
def test_matches_concrete_integer_ring(ring, modulus):
    # Z_N is the product of its prime-power parts, so PIS(Z_N) must be isomorphic
    ours = build_pis(parse_ring_spec(ring))
    oracle = zn_pis(modulus)
    assert nx.is_isomorphic(to_nx(ours), oracle)


def test_definition_on_one_pair():
    g = build_pis((1, 1, 1))
    assert g.has_edge(g.index((1, 0, 0)), g.index((1, 1, 0)))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
@settings(max_examples=30)
def test_adjacency_invariant(factors):
    spec = RingSpec(factors)
    if factors == [1]:
        return
    g = build_pis(spec)
    for i, j in itertools.product(range(g.n), repeat=2):
        expected = i != j and is_prime_ideal(spec, ideal_sum(g.vertex_ideals[i], g.vertex_ideals[j]))
        assert g.has_edge(i, j) == expected


def test_field_has_no_graph():
    with pytest.raises(EmptyGraphError):
        build_pis((1,))


@pytest.mark.parametrize("t, expected_edges", [(2, 0), (3, 1), (4, 2), (6, 4)])
def test_local_rings_are_stars(t, expected_edges):
    g = build_pis((t,))
    assert g.n == t - 1 and g.edge_count == expected_edges
    if t >= 3:
        assert g.degree(g.index((1,))) == t - 2


@pytest.mark.parametrize(
    "factors, expected", [((1, 1), True), ((1, 1, 1), False), ((2, 1), False), ((3, 3), False)]
)
def test_is_disconnected_case(factors, expected):
    spec = RingSpec(factors)
    assert is_disconnected_case(spec) is expected
    assert is_connected(build_pis(spec)) is not expected


def _nonlocal_specs():
    for n in (2, 3):
        for factors in itertools.product(range(1, 4), repeat=n):
            if factors != (1, 1):
                yield factors


@pytest.mark.parametrize("factors", list(_nonlocal_specs()))
def test_diameter_two(factors):
    assert diameter(build_pis(factors)) == 2


@pytest.mark.parametrize("factors", [(1, 1, 1), (2, 2), (3, 1), (2, 2, 1), (3, 3, 3)])
def test_maximal_ideals_independent(factors):
    g = build_pis(factors)
    n = len(factors)
    maximal = [g.index(tuple(int(i == k) for i in range(n))) for k in range(n)]
    assert not any(g.has_edge(u, v) for u, v in itertools.combinations(maximal, 2))


@pytest.mark.parametrize("factors, perm", [((3, 3, 1), (1, 0, 2)), ((2, 2, 2, 1), (2, 0, 1, 3))])
def test_permuting_equal_factors_is_an_isomorphism(factors, perm):
    g = build_pis(factors)
    h = build_pis(factors)
    for i, j in g.edges():
        a = tuple(g.vertex_ideals[i][p] for p in perm)
        b = tuple(g.vertex_ideals[j][p] for p in perm)
        assert h.has_edge(h.index(a), h.index(b))


def test_degree_multiset_ignores_factor_order():
    a, b = build_pis((3, 2, 1)), build_pis((1, 3, 2))
    assert Counter(map(a.degree, range(a.n))) == Counter(map(b.degree, range(b.n)))


def test_dot_export(tmp_path):
    g = build_pis(parse_ring_spec("Z(4) x Z(9)"))
    text = to_dot(g, "Z(4) x Z(9)")
    lines = text.splitlines()
    assert lines[0] == 'graph "Z(4) x Z(9)" {' and lines[-1] == "}"
    node_lines = [l for l in lines if l.endswith(";") and "--" not in l]
    edge_lines = [l for l in lines if "--" in l]
    assert len(node_lines) == 7 and len(edge_lines) == 12
    assert '  "M_1 x Z(9)" -- "M_1 x M_2";' in edge_lines
    path = tmp_path / "g.dot"
    write_dot(g, path, "Z(4) x Z(9)")
    assert path.read_text(encoding="utf-8") == text
    assert to_dot(g, "Z(4) x Z(9)") == text
