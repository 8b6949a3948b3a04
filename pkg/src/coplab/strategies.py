"""Deterministic cop and robber strategies and the game simulator."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import HypothesisViolated, IllegalMove, NotNonBipartite, Disconnected
from .game import KCopsResult
from .graph import Graph, bipartition, distance_matrix, is_connected

COP, ROBBER = "cop", "robber"

Position = tuple[tuple[int, ...], int]


class Strategy:
    """Base class. Cop strategies implement ``place(G)`` and
    ``move(G, cops, robber, history)`` returning a cop tuple; robber
    strategies implement ``place(G, cops)`` and the same ``move`` returning a
    vertex. ``history`` lists the completed rounds as (cops, robber)."""

    side: str = COP
    name: str = "strategy"


@dataclass
class Trace:
    rounds: list[Position] = field(default_factory=list)
    outcome: str = "SURVIVED"
    capture_round: int | None = None
    horizon: int = 0

    @property
    def captured(self) -> bool:
        return self.outcome == "CAPTURED"

    def to_json(self) -> dict:
        return {
            "rounds": [{"cops": list(c), "robber": r} for c, r in self.rounds],
            "outcome": self.outcome,
            "capture_round": self.capture_round,
            "horizon": self.horizon,
        }


def _check_cops(G: Graph, old: Sequence[int] | None, new: Sequence[int], who: str) -> tuple[int, ...]:
    new = tuple(int(c) for c in new)
    if any(not 0 <= c < G.n for c in new):
        raise IllegalMove(f"{who} placed a cop off the graph: {new}")
    if old is not None:
        if len(old) != len(new):
            raise IllegalMove(f"{who} changed the number of cops")
        for a, b in zip(old, new):
            if a != b and not G.has_edge(a, b):
                raise IllegalMove(f"{who} moved a cop {a} -> {b}")
    return new


def _check_robber(G: Graph, old: int | None, new: int, who: str) -> int:
    new = int(new)
    if not 0 <= new < G.n:
        raise IllegalMove(f"{who} placed the robber off the graph: {new}")
    if old is not None and old != new and not G.has_edge(old, new):
        raise IllegalMove(f"{who} moved the robber {old} -> {new}")
    return new


def simulate(G: Graph, cop_strategy: Strategy, robber_strategy: Strategy,
             horizon: int) -> Trace:
    """Play: cops place, robber places, then rounds of cop move, robber move."""
    if cop_strategy.side != COP or robber_strategy.side != ROBBER:
        raise ValueError("strategy sides do not match their roles")
    trace = Trace(horizon=horizon)
    cops = _check_cops(G, None, cop_strategy.place(G), cop_strategy.name)
    robber = _check_robber(G, None, robber_strategy.place(G, cops), robber_strategy.name)
    trace.rounds.append((cops, robber))
    if robber in cops:
        trace.outcome, trace.capture_round = "CAPTURED", 0
        return trace
    for rnd in range(1, horizon + 1):
        history = list(trace.rounds)
        cops = _check_cops(G, cops, cop_strategy.move(G, cops, robber, history), cop_strategy.name)
        if robber in cops:
            trace.rounds.append((cops, robber))
            trace.outcome, trace.capture_round = "CAPTURED", rnd
            return trace
        robber = _check_robber(G, robber, robber_strategy.move(G, cops, robber, history),
                               robber_strategy.name)
        trace.rounds.append((cops, robber))
        if robber in cops:
            trace.outcome, trace.capture_round = "CAPTURED", rnd
            return trace
    return trace


# ---------------------------------------------------------------- cops

class GreedyCops(Strategy):
    """Every cop steps along a shortest path toward the robber."""

    side = COP

    def __init__(self, k: int = 1, start: Sequence[int] | int = 0):
        self.k = k
        self.start = (start,) * k if isinstance(start, int) else tuple(start)
        self.name = f"greedy{k}"
        self._dist = None
        self._graph = None

    def _distances(self, G: Graph):
        if self._graph is not G:
            self._graph, self._dist = G, distance_matrix(G)
        return self._dist

    def place(self, G: Graph) -> tuple[int, ...]:
        return self.start

    def move(self, G, cops, robber, history):
        dist = self._distances(G)
        out = []
        for c in cops:
            best = min((c,) + G.adj[c], key=lambda v: (dist[v][robber], v))
            out.append(best)
        return tuple(out)


class SolverCops(Strategy):
    """Optimal cops from a solved game; greedy pursuit outside the win region."""

    side = COP

    def __init__(self, result: KCopsResult, start: Sequence[int] | None = None):
        self.result = result
        self.name = f"optimal{result.k}"
        default = result.start_position()
        self.start = tuple(start) if start is not None else (default or (0,) * result.k)
        self._greedy = GreedyCops(result.k)

    def place(self, G):
        return self.start

    def move(self, G, cops, robber, history):
        move = self.result.cop_move(tuple(cops), robber)
        if move is None:
            return self._greedy.move(G, cops, robber, history)
        return move


# ---------------------------------------------------------------- robbers

class StationaryRobber(Strategy):
    side = ROBBER

    def __init__(self, start: int | None = None):
        self.start = start
        self.name = "stationary"

    def place(self, G, cops):
        if self.start is not None:
            return self.start
        free = [v for v in range(G.n) if v not in cops]
        return free[-1] if free else 0

    def move(self, G, cops, robber, history):
        return robber


class SolverRobber(Strategy):
    """Stays outside the cop-win region of a solved game while it can."""

    side = ROBBER

    def __init__(self, result: KCopsResult):
        self.result = result
        self.name = f"optimal-vs-{result.k}"

    def _check(self, cops) -> None:
        if len(cops) != self.result.k:
            raise ValueError(f"solved for {self.result.k} cops, got {len(cops)}")

    def place(self, G, cops):
        self._check(cops)
        r = self.result.robber_start(tuple(cops))
        return 0 if r is None else r

    def move(self, G, cops, robber, history):
        self._check(cops)
        r = self.result.robber_move(tuple(cops), robber)
        return robber if r is None else r


class EvasionRobber(Strategy):
    """Robber confined to vertices of degree >= D that always steps to a
    neighbor neither occupied by nor adjacent to a cop.

    Raises HypothesisViolated when no such neighbor exists, which happens only
    if the cops outnumber the guarantee the strategy relies on.
    """

    side = ROBBER

    def __init__(self, G: Graph, D: int, opening: str, name: str, bound: Fraction):
        self.D = D
        self.good = frozenset(v for v in range(G.n) if G.degree(v) >= D)
        self.opening = opening
        self.name = name
        self.bound = bound

    def _safe(self, G: Graph, v: int, cops) -> bool:
        return v in self.good and v not in cops and not any(G.has_edge(v, c) for c in cops)

    def place(self, G, cops):
        cops = set(cops)
        if self.opening == "neighbor":
            for u in sorted(self.good - cops):
                for w in G.adj[u]:
                    if self._safe(G, w, cops):
                        return w
        else:
            for u in sorted(self.good):
                if self._safe(G, u, cops):
                    return u
        raise HypothesisViolated("no safe starting vertex")

    def move(self, G, cops, robber, history):
        cops = set(cops)
        for w in G.adj[robber]:
            if self._safe(G, w, cops):
                return w
        raise HypothesisViolated(f"no safe neighbor of {robber} against cops {sorted(cops)}")


def _low_count(G: Graph, D: int) -> int:
    return sum(1 for d in G.degrees() if d < D)


def evasion_lowdeg(G: Graph, t: int, D: int) -> EvasionRobber:
    """Robber against fewer than (D - k)/t cops on a K_{2,t}-free graph."""
    k = _low_count(G, D)
    if D <= k:
        raise HypothesisViolated(f"need D > k, got D={D}, k={k}")
    return EvasionRobber(G, D, "neighbor", f"evasion_lowdeg(t={t},D={D})", Fraction(D - k, t))


def evasion_girth5(G: Graph, D: int) -> EvasionRobber:
    """Robber against D - k - 1 cops on a graph of girth at least 5."""
    k = _low_count(G, D)
    if D <= k:
        raise HypothesisViolated(f"need D > k, got D={D}, k={k}")
    return EvasionRobber(G, D, "direct", f"evasion_girth5(D={D})", Fraction(D - k))


# ---------------------------------------------------------------- double cover

def _require_cover_base(G: Graph) -> None:
    if not is_connected(G):
        raise Disconnected("base graph must be connected")
    if bipartition(G) is not None:
        raise NotNonBipartite("base graph is bipartite; its double cover is disconnected")


def _project_history(history, n):
    return [(tuple(c % n for c in cops), r % n) for cops, r in history]


class LiftedRobber(Strategy):
    """Robber on B(G) that replays a robber strategy of G on projected cops;
    a move u -> v becomes (u, a) -> (v, 1 - a) and a pass stays put."""

    side = ROBBER

    def __init__(self, base: Strategy, G: Graph):
        _require_cover_base(G)
        self.base, self.G = base, G
        self.name = f"lift({base.name})"

    def place(self, B, cops):
        n = self.G.n
        return self.base.place(self.G, tuple(c % n for c in cops))

    def move(self, B, cops, robber, history):
        n = self.G.n
        u, a = robber % n, robber // n
        v = self.base.move(self.G, tuple(c % n for c in cops), u, _project_history(history, n))
        return robber if v == u else v + (1 - a) * n


def lift_robber(S: Strategy, G: Graph) -> LiftedRobber:
    return LiftedRobber(S, G)


class DoubledCops(Strategy):
    """Two cops on B(G) per cop of a strategy on G, one on each sheet."""

    side = COP

    def __init__(self, base: Strategy, G: Graph):
        _require_cover_base(G)
        self.base, self.G = base, G
        self.name = f"double({base.name})"

    def place(self, B):
        n = self.G.n
        out = []
        for c in self.base.place(self.G):
            out.extend((c, c + n))
        return tuple(out)

    def move(self, B, cops, robber, history):
        n = self.G.n
        proj = tuple(cops[i] % n for i in range(0, len(cops), 2))
        hist = [(tuple(c[i] % n for i in range(0, len(c), 2)), r % n) for c, r in history]
        new = self.base.move(self.G, proj, robber % n, hist)
        out = []
        for i, (old, nxt) in enumerate(zip(proj, new)):
            for w in cops[2 * i: 2 * i + 2]:
                out.append(w if nxt == old else nxt + (1 - w // n) * n)
        return tuple(out)


def double_cops(S: Strategy, G: Graph) -> DoubledCops:
    return DoubledCops(S, G)
