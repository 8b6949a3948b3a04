import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import atlas_connected, heawood_graph, random_graph, to_nx
from coplab.constructions import double_cover
from coplab.errors import SizeExceeded
from coplab.graph import (
    Graph,
    circulant_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from coplab.symmetry import are_isomorphic, find_isomorphism, is_vertex_transitive, vertex_orbits


def _shuffled(G: Graph, seed: int) -> Graph:
    perm = list(range(G.n))
    random.Random(seed).shuffle(perm)
    return G.relabel(perm)


def test_orbits_examples():
    assert vertex_orbits(cycle_graph(7)) == [list(range(7))]
    assert sorted(vertex_orbits(path_graph(3))) == [[0, 2], [1]]
    assert vertex_orbits(petersen_graph()) == [list(range(10))]
    assert sorted(map(len, vertex_orbits(star_graph(4)))) == [1, 4]


def test_isomorphism_examples():
    C6 = cycle_graph(6)
    assert are_isomorphic(C6, _shuffled(C6, 1))
    assert not are_isomorphic(C6, disjoint_union(complete_graph(3), complete_graph(3)))
    assert are_isomorphic(double_cover(cycle_graph(5)), cycle_graph(10))


def test_isomorphism_mapping_is_valid():
    G = heawood_graph()
    H = _shuffled(G, 5)
    f = find_isomorphism(G, H)
    assert f is not None
    assert {tuple(sorted((f[u], f[v]))) for u, v in G.edges()} == set(H.edges())


def test_vertex_transitive():
    assert is_vertex_transitive(petersen_graph())
    assert is_vertex_transitive(heawood_graph())
    assert is_vertex_transitive(circulant_graph(12, [1, 5]))
    assert not is_vertex_transitive(path_graph(4))


def test_size_limit():
    with pytest.raises(SizeExceeded):
        vertex_orbits(cycle_graph(70))


def test_atlas_pairs_against_networkx():
    graphs = [G for G in atlas_connected(6) if G.n == 6]
    rng = random.Random(11)
    for _ in range(150):
        G, H = rng.choice(graphs), rng.choice(graphs)
        H = _shuffled(H, rng.randrange(1000))
        assert are_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_orbits_match_networkx_automorphisms(n, p, seed):
    G = random_graph(n, p, random.Random(seed))
    g = to_nx(G)
    matcher = nx.algorithms.isomorphism.GraphMatcher(g, g)
    orbit_of = {v: {v} for v in range(n)}
    for auto in matcher.isomorphisms_iter():
        for v, w in auto.items():
            orbit_of[v].add(w)
    expected = sorted(sorted(o) for o in {frozenset(o) for o in orbit_of.values()})
    assert sorted(vertex_orbits(G)) == expected
