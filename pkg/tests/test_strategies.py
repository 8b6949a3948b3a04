import json

import pytest

from _corpus import heawood_graph
from coplab.constructions import double_cover
from coplab.errors import HypothesisViolated, IllegalMove, NotNonBipartite
from coplab.game import solve
from coplab.graph import cycle_graph, path_graph, petersen_graph
from coplab.strategies import (
    COP,
    ROBBER,
    GreedyCops,
    SolverCops,
    SolverRobber,
    StationaryRobber,
    Strategy,
    double_cops,
    evasion_girth5,
    evasion_lowdeg,
    lift_robber,
    simulate,
)


class _Teleport(Strategy):
    side = COP
    name = "teleport"

    def place(self, G):
        return (0,)

    def move(self, G, cops, robber, history):
        return (G.n - 1,)


def test_greedy_catches_stationary_on_path():
    trace = simulate(path_graph(8), GreedyCops(1, 0), StationaryRobber(), 20)
    assert trace.captured and trace.capture_round == 7
    js = trace.to_json()
    assert js["outcome"] == "CAPTURED" and js["rounds"][0] == {"cops": [0], "robber": 7}
    json.dumps(js)


def test_illegal_moves_are_caught():
    with pytest.raises(IllegalMove):
        simulate(path_graph(5), _Teleport(), StationaryRobber(2), 3)
    with pytest.raises(ValueError):
        simulate(path_graph(5), StationaryRobber(), GreedyCops(), 3)


def test_evasion_lowdeg_on_heawood():
    G = heawood_graph()
    for start in range(G.n):
        trace = simulate(G, GreedyCops(1, start), evasion_lowdeg(G, 2, 3), 300)
        assert trace.outcome == "SURVIVED"
    trace = simulate(G, SolverCops(solve(G, 1)), evasion_lowdeg(G, 2, 3), 300)
    assert trace.outcome == "SURVIVED"


def test_evasion_girth5_on_petersen():
    G = petersen_graph()
    for start in [(0, 0), (0, 5), (2, 7)]:
        trace = simulate(G, GreedyCops(2, start), evasion_girth5(G, 3), 1000)
        assert trace.outcome == "SURVIVED" and len(trace.rounds) == 1001


def test_evasion_fails_loudly_when_outnumbered():
    G = petersen_graph()
    with pytest.raises(HypothesisViolated):
        simulate(G, SolverCops(solve(G, 3)), evasion_girth5(G, 3), 50)
    with pytest.raises(HypothesisViolated):
        evasion_lowdeg(path_graph(3), 2, 2)


def test_optimal_play():
    G = petersen_graph()
    win = solve(G, 3)
    trace = simulate(G, SolverCops(win), SolverRobber(win), 50)
    assert trace.captured and trace.capture_round <= win.rounds + 1
    lose = solve(G, 2)
    trace = simulate(G, GreedyCops(2, (0, 1)), SolverRobber(lose), 200)
    assert trace.outcome == "SURVIVED"


def test_lifted_robber_survives_on_cover():
    G = cycle_graph(5)
    B = double_cover(G)
    base = solve(G, 1)
    for start in range(B.n):
        trace = simulate(B, GreedyCops(1, start), lift_robber(SolverRobber(base), G), 100)
        assert trace.outcome == "SURVIVED"
    assert lift_robber(StationaryRobber(), G).side == ROBBER


def test_doubled_cops_capture_on_cover():
    G = petersen_graph()
    win = solve(G, 3)
    B = double_cover(G)
    cops = double_cops(SolverCops(win), G)
    for robber_start in range(B.n):
        trace = simulate(B, cops, StationaryRobber(robber_start), 100)
        assert trace.captured
    with pytest.raises(ValueError):
        simulate(B, cops, lift_robber(SolverRobber(solve(G, 2)), G), 10)


def test_cover_strategies_need_non_bipartite_base():
    with pytest.raises(NotNonBipartite):
        lift_robber(StationaryRobber(), cycle_graph(6))
    with pytest.raises(NotNonBipartite):
        double_cops(GreedyCops(), cycle_graph(6))
