import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import heawood_graph
from coplab.certify import Kind
from coplab.constructions import projective_plane
from coplab.errors import BudgetExceeded, IsolatedVertex, NotRegular
from coplab.game import cop_number
from coplab.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from coplab.hypercover import (
    Hypergraph,
    blocking_exact,
    blocking_greedy,
    blocking_lp,
    bucket_fractional,
    dlc_cover_bound,
    dlc_enumerate,
    domination_bound,
    lovasz_factor,
    neighborhood_hypergraph,
    read_hypergraph,
    vertex_transitive_formula,
)


def fano() -> Hypergraph:
    return Hypergraph.of(7, projective_plane(2).lines)


def _brute_tau(H: Hypergraph) -> int:
    for size in range(H.n + 1):
        for S in itertools.combinations(range(H.n), size):
            if H.is_blocking(S):
                return size
    raise AssertionError


@st.composite
def hypergraphs(draw, max_n=8, max_m=10):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = [draw(st.sets(st.integers(0, n - 1), min_size=1)) for _ in range(m)]
    return Hypergraph.of(n, edges)


# ---------------------------------------------------------------- exact, LP, greedy

def test_exact_examples():
    assert blocking_exact(Hypergraph.of(2, [{0, 1}]))[0] == 1
    tau, S = blocking_exact(fano())
    assert tau == 3 and fano().is_blocking(S) and _brute_tau(fano()) == 3
    assert blocking_exact(Hypergraph.of(3, [])) == (0, [])


def test_lp_examples():
    assert blocking_lp(Hypergraph.of(2, [{0, 1}])).objective == 1
    sol = blocking_lp(fano())
    assert sol.objective == Fraction(7, 3) and sol.is_feasible(fano())
    assert sum(sol.dual) == Fraction(7, 3)
    disjoint = Hypergraph.of(8, [{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    assert blocking_lp(disjoint).objective == 4


def test_greedy_examples():
    rep = blocking_greedy(fano())
    assert rep.size == 3 and rep.holds
    assert rep.guarantee == pytest.approx((1 + math.log2(3)) * 7 / 3)
    one = blocking_greedy(Hypergraph.of(2, [{0, 1}]))
    assert one.size == 1 and one.guarantee == 1 and one.holds
    star = Hypergraph.of(5, [{0, 1}, {0, 2}, {0, 3, 4}])
    assert blocking_greedy(star).chosen == (0,)
    assert lovasz_factor(1) == 1


@settings(max_examples=120, deadline=None)
@given(hypergraphs())
def test_sandwich(H):
    lp = blocking_lp(H)
    tau, S = blocking_exact(H)
    rep = blocking_greedy(H)
    assert H.is_blocking(S) and H.is_blocking(rep.chosen)
    assert tau == _brute_tau(H)
    assert lp.objective <= tau <= rep.size
    assert rep.holds
    assert lp.is_feasible(H)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(6, 8))
def test_lp_matches_scipy(H):
    scipy_opt = pytest.importorskip("scipy.optimize")
    if not H.edges:
        return
    A = [[-1 if v in e else 0 for v in range(H.n)] for e in H.edges]
    res = scipy_opt.linprog([1] * H.n, A_ub=A, b_ub=[-1] * len(H.edges), bounds=(0, None))
    assert float(blocking_lp(H).objective) == pytest.approx(res.fun, abs=1e-7)


def test_exact_budget():
    rng = random.Random(1)
    big = Hypergraph.of(60, [rng.sample(range(60), 3) for _ in range(80)])
    with pytest.raises(BudgetExceeded):
        blocking_exact(big, limit=30)


def test_hypergraph_text_roundtrip(tmp_path):
    H = fano()
    text = H.to_text()
    assert text.splitlines()[0] == "7 7"
    assert Hypergraph.from_text(text) == H
    path = tmp_path / "fano.hg"
    path.write_text(text)
    assert read_hypergraph(path) == H


# ---------------------------------------------------------------- domination

def _total_domination_number(G: Graph) -> int:
    return _brute_tau(neighborhood_hypergraph(G))


def test_domination_examples():
    rep = domination_bound(complete_graph(4))
    assert rep.size <= 2 and rep.bound == pytest.approx(4 / 3 * (1 + math.log2(3)))
    rep = domination_bound(cycle_graph(6))
    assert rep.size <= 4 and rep.bound == pytest.approx(6.0) and _total_domination_number(cycle_graph(6)) == 4
    rep = domination_bound(star_graph(5))
    assert sorted(rep.chosen) == [0, 1] and rep.holds and rep.total_dominating
    assert rep.certificate.kind == Kind.HYPER_UPPER
    with pytest.raises(IsolatedVertex):
        domination_bound(empty_graph(2))


def test_open_neighborhood_hypergraph():
    H = neighborhood_hypergraph(path_graph(3))
    assert H.edges == (frozenset({1}), frozenset({0, 2}), frozenset({1}))


# ---------------------------------------------------------------- buckets

def test_bucket_examples():
    rep = bucket_fractional(petersen_graph(), 2)
    assert rep.solution.objective == Fraction(10, 3)
    assert rep.solution.objective == domination_bound(petersen_graph()).lp_witness_value
    rep = bucket_fractional(star_graph(5), 2)
    assert rep.solution.weights[0] == 1 and rep.solution.weights[1] == Fraction(1, 5)
    assert rep.solution.objective == 2
    H = heawood_graph()
    pend = Graph.from_edges(15, H.edges() + [(0, 14)])
    rep = bucket_fractional(pend, 2)
    assert rep.feasible and rep.min_edge_load >= 1
    assert rep.solution.is_feasible(neighborhood_hypergraph(pend))
    with pytest.raises(ValueError):
        bucket_fractional(petersen_graph(), 1)


# ---------------------------------------------------------------- caterpillars

def test_dlc_enumeration_examples():
    fam = dlc_enumerate(path_graph(4))
    assert fam.diameter == 3 and len(fam.dlcs) == 2
    assert all(d.members == frozenset(range(4)) for d in fam.dlcs)
    fam = dlc_enumerate(cycle_graph(6))
    assert fam.diameter == 3 and all(len(d.members) == 6 for d in fam.dlcs)
    fam = dlc_enumerate(petersen_graph())
    assert fam.diameter == 2 and fam.mu2 >= 2 * fam.diameter / 3


def test_dlc_cover_bound_examples():
    cert = dlc_cover_bound(cycle_graph(8))
    assert cert.kind == Kind.DLC_UPPER and cert.witness["vertex_transitive"]
    assert cert.witness["formula_bound"] == pytest.approx(9.0)
    assert cert.bound >= cop_number(cycle_graph(8))
    cert = dlc_cover_bound(petersen_graph())
    assert cert.witness["formula_bound"] == pytest.approx(30 * math.log2(6) / 6)
    assert cert.bound >= 3
    assert vertex_transitive_formula(8, 2, 4) == pytest.approx(9.0)
    with pytest.raises(NotRegular):
        dlc_cover_bound(path_graph(4))


def test_dlc_cover_covers_every_vertex():
    G = heawood_graph()
    cert = dlc_cover_bound(G)
    covered = set()
    for path in cert.witness["chosen_paths"]:
        for u in path:
            covered |= {u} | set(G.adj[u])
    assert covered == set(range(G.n))
