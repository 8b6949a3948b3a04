"""Hypergraph blocking sets (exact, fractional, greedy) and the cover bounds
built on them: domination, degree buckets and diameter-length caterpillars."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .certify import BoundCertificate, Kind
from .errors import (
    BudgetExceeded,
    Disconnected,
    EmptyEdge,
    InvariantViolation,
    IsolatedVertex,
    NotRegular,
)
from .graph import Graph, bfs_distances, is_connected
from .symmetry import DEFAULT_LIMIT, is_vertex_transitive


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise EmptyEdge("hyperedges must be nonempty")
            if min(e) < 0 or max(e) >= self.n:
                raise ValueError(f"hyperedge {sorted(e)} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, tuple(frozenset(e) for e in edges))

    @property
    def max_degree(self) -> int:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return max(deg, default=0)

    def is_blocking(self, S: Iterable[int]) -> bool:
        S = set(S)
        return all(e & S for e in self.edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(" ".join(map(str, sorted(e))) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        n, m = int(rows[0][0]), int(rows[0][1])
        if len(rows) - 1 != m:
            raise ValueError(f"header announces {m} edges, found {len(rows) - 1}")
        return cls.of(n, ([int(x) for x in r] for r in rows[1:]))


def read_hypergraph(path: str | Path) -> Hypergraph:
    return Hypergraph.from_text(Path(path).read_text())


def neighborhood_hypergraph(G: Graph) -> Hypergraph:
    """One hyperedge N(w) per vertex w; its blocking sets are total dominating sets."""
    return Hypergraph.of(G.n, (G.adj[w] for w in range(G.n)))


# ---------------------------------------------------------------- fractional LP

@dataclass(frozen=True)
class FractionalSolution:
    weights: tuple[Fraction, ...]
    objective: Fraction
    # optimal fractional matching certifying optimality by duality
    dual: tuple[Fraction, ...] = ()

    def is_feasible(self, H: Hypergraph) -> bool:
        return all(w >= 0 for w in self.weights) and all(
            sum(self.weights[v] for v in e) >= 1 for e in H.edges)


def _simplex_max(A: list[list[Fraction]], c: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """max c.y s.t. A y <= 1, y >= 0, by the tableau method with Bland's rule.

    Returns the optimal ``y`` and the optimal dual prices of the rows.
    """
    m, nv = len(A), len(c)
    one = Fraction(1)
    rows = [list(A[i]) + [one if j == i else Fraction(0) for j in range(m)] + [one]
            for i in range(m)]
    # reduced profits for the structural variables and slacks
    obj = list(c) + [Fraction(0)] * m
    basis = [nv + i for i in range(m)]
    while True:
        enter = next((j for j in range(nv + m) if obj[j] > 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise InvariantViolation("packing LP cannot be unbounded")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, rows[leave][:-1])]
        basis[leave] = enter
    y = [Fraction(0)] * nv
    for i, b in enumerate(basis):
        if b < nv:
            y[b] = rows[i][-1]
    prices = [-obj[nv + i] for i in range(m)]
    return y, prices


def blocking_lp(H: Hypergraph) -> FractionalSolution:
    """Exact optimal fractional blocking set.

    Solves the dual packing LP (weights on edges, each vertex load <= 1); the
    row prices at its optimum are an optimal fractional blocking set, and both
    sides are checked for feasibility and equal value.
    """
    if not H.edges:
        return FractionalSolution(tuple(Fraction(0) for _ in range(H.n)), Fraction(0), ())
    used = sorted(set().union(*H.edges))
    row_of = {v: i for i, v in enumerate(used)}
    A = [[Fraction(0)] * len(H.edges) for _ in used]
    for j, e in enumerate(H.edges):
        for v in e:
            A[row_of[v]][j] = Fraction(1)
    y, prices = _simplex_max(A, [Fraction(1)] * len(H.edges))
    x = [Fraction(0)] * H.n
    for v, i in row_of.items():
        x[v] = prices[i]
    sol = FractionalSolution(tuple(x), sum(x, Fraction(0)), tuple(y))
    if not sol.is_feasible(H):
        raise InvariantViolation("fractional blocking set is infeasible")
    loads = [sum((y[j] for j, e in enumerate(H.edges) if v in e), Fraction(0)) for v in used]
    if any(w < 0 for w in y) or any(l > 1 for l in loads):
        raise InvariantViolation("dual packing is infeasible")
    if sum(y, Fraction(0)) != sol.objective:
        raise InvariantViolation("primal and dual objectives differ")
    return sol


# ---------------------------------------------------------------- greedy

def greedy_blocking_set(H: Hypergraph) -> list[int]:
    """Repeatedly take the vertex in most unhit edges (lowest index on ties)."""
    unhit = [e for e in H.edges]
    chosen = []
    while unhit:
        count = [0] * H.n
        for e in unhit:
            for v in e:
                count[v] += 1
        v = max(range(H.n), key=lambda u: (count[u], -u))
        chosen.append(v)
        unhit = [e for e in unhit if v not in e]
    return chosen


def lovasz_factor(d: int) -> float:
    return 1 + math.log2(d) if d >= 1 else 1.0


@dataclass(frozen=True)
class GreedyReport:
    chosen: tuple[int, ...]
    tau_star: Fraction
    max_degree: int

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def guarantee(self) -> float:
        return lovasz_factor(self.max_degree) * float(self.tau_star)

    @property
    def holds(self) -> bool:
        return self.size <= self.guarantee + 1e-9


def blocking_greedy(H: Hypergraph, tau_star: Fraction | None = None) -> GreedyReport:
    chosen = greedy_blocking_set(H)
    if tau_star is None:
        tau_star = blocking_lp(H).objective
    return GreedyReport(tuple(chosen), tau_star, H.max_degree)


# ---------------------------------------------------------------- exact

def _packing_lower_bound(edges: Sequence[frozenset[int]]) -> int:
    used: set[int] = set()
    count = 0
    for e in sorted(edges, key=len):
        if not (e & used):
            used |= e
            count += 1
    return count


def blocking_exact(H: Hypergraph, limit: int = 30, node_budget: int = 10**6) -> tuple[int, list[int]]:
    """Minimum blocking set by branch and bound.

    The incumbent starts from greedy; the root is bounded below by the
    fractional optimum and every node by a greedy disjoint-edge packing.
    """
    if H.n > limit and len(H.edges) > limit:
        raise BudgetExceeded(f"hypergraph with n={H.n}, {len(H.edges)} edges exceeds limit {limit}")
    if not H.edges:
        return 0, []
    best = greedy_blocking_set(H)
    root_lb = max(math.ceil(blocking_lp(H).objective), _packing_lower_bound(H.edges))
    nodes = 0

    def search(chosen: list[int], edges: list[frozenset[int]]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"branch and bound exceeded {node_budget} nodes")
        if not edges:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing_lower_bound(edges) >= len(best):
            return
        pivot = min(edges, key=lambda e: (len(e), sorted(e)))
        hits = {v: sum(1 for e in edges if v in e) for v in pivot}
        order = sorted(pivot, key=lambda v: (-hits[v], v))
        banned: set[int] = set()
        for v in order:
            rest = []
            ok = True
            for e in edges:
                if v in e:
                    continue
                e2 = e - banned
                if not e2:
                    ok = False
                    break
                rest.append(e2)
            if ok:
                search(chosen + [v], rest)
            if len(best) <= root_lb:
                return
            banned.add(v)

    if len(best) > root_lb:
        search([], list(H.edges))
    return len(best), sorted(best)


# ---------------------------------------------------------------- domination

@dataclass(frozen=True)
class DominationReport:
    chosen: tuple[int, ...]
    n: int
    min_degree: int
    max_degree: int
    lp_witness_value: Fraction
    bound: float
    total_dominating: bool
    certificate: BoundCertificate

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def holds(self) -> bool:
        return self.size <= self.bound + 1e-9


def domination_bound(G: Graph) -> DominationReport:
    """Greedy total dominating set against the (n/delta)(1 + log2 Delta) bound."""
    if G.n == 0 or G.min_degree < 1:
        raise IsolatedVertex("domination bound needs minimum degree >= 1")
    H = neighborhood_hypergraph(G)
    chosen = greedy_blocking_set(H)
    S = set(chosen)
    total = all(any(w in S for w in G.adj[v]) for v in range(G.n))
    delta, Delta = G.min_degree, G.max_degree
    witness = Fraction(G.n, delta)
    cert = BoundCertificate(Kind.HYPER_UPPER, {"source": "dominating_set"}, Fraction(len(chosen)),
                            {"dominating_set": sorted(chosen)})
    return DominationReport(tuple(chosen), G.n, delta, Delta, witness,
                            G.n / delta * lovasz_factor(Delta), total, cert)


def smallest_neighbor_degree(G: Graph) -> list[int]:
    return [min(G.degree(v) for v in G.adj[u]) for u in range(G.n)]


def _power_bucket(value: int, omega: int) -> int:
    """0 if value <= omega, else the i with omega^i < value <= omega^(i+1)."""
    i, top = 0, omega
    while value > top:
        top *= omega
        i += 1
    return i


@dataclass(frozen=True)
class BucketReport:
    solution: FractionalSolution
    omega: int
    feasible: bool
    min_edge_load: Fraction
    degree_buckets: dict[int, int]
    weight_buckets: dict[int, tuple[int, Fraction]]
    above_sqrt_n: int


def bucket_fractional(G: Graph, omega: int) -> BucketReport:
    """Feasible fractional blocking set x_v = 1/s(v), s(v) the least degree
    among v's neighbors, with degree and weight bucket counts by powers of omega."""
    if G.n == 0 or G.min_degree < 1:
        raise IsolatedVertex("bucket weights need minimum degree >= 1")
    if omega < 2:
        raise ValueError("omega must be at least 2")
    s = smallest_neighbor_degree(G)
    x = tuple(Fraction(1, sv) for sv in s)
    loads = [sum((x[v] for v in G.adj[w]), Fraction(0)) for w in range(G.n)]
    feasible = all(l >= 1 for l in loads)
    if not feasible:
        raise InvariantViolation("bucket weights violate a neighborhood constraint")
    degree_buckets: dict[int, int] = {}
    for d in G.degrees():
        b = _power_bucket(d, omega)
        degree_buckets[b] = degree_buckets.get(b, 0) + 1
    weight_buckets: dict[int, tuple[int, Fraction]] = {}
    for sv, xv in zip(s, x):
        b = _power_bucket(sv, omega)
        cnt, tot = weight_buckets.get(b, (0, Fraction(0)))
        weight_buckets[b] = (cnt + 1, tot + xv)
    sol = FractionalSolution(x, sum(x, Fraction(0)))
    above = sum(1 for d in G.degrees() if d * d > G.n)
    return BucketReport(sol, omega, feasible, min(loads), dict(sorted(degree_buckets.items())),
                        dict(sorted(weight_buckets.items())), above)


# ---------------------------------------------------------------- caterpillars

@dataclass(frozen=True)
class DLC:
    path: tuple[int, ...]
    members: frozenset[int]


@dataclass(frozen=True)
class DLCFamily:
    diameter: int
    dlcs: tuple[DLC, ...]
    mu1: int
    mu2: int


def lex_shortest_path(G: Graph, s: int, t: int, dist_to_t: Sequence[float] | None = None) -> list[int]:
    if dist_to_t is None:
        dist_to_t = bfs_distances(G, t)
    path = [s]
    while path[-1] != t:
        u = path[-1]
        path.append(min(w for w in G.adj[u] if dist_to_t[w] == dist_to_t[u] - 1))
    return path


def dlc_enumerate(G: Graph) -> DLCFamily:
    """One caterpillar per ordered pair at distance diam(G): the lexicographically
    least shortest path plus every neighbor of its vertices."""
    if not is_connected(G):
        raise Disconnected("caterpillars need a connected graph")
    dist = [bfs_distances(G, v) for v in range(G.n)]
    diam = int(max((max(row) for row in dist), default=0))
    dlcs = []
    for s in range(G.n):
        for t in range(G.n):
            if dist[s][t] == diam and (diam > 0 or s == t):
                path = lex_shortest_path(G, s, t, dist[t])
                members = set(path)
                for u in path:
                    members.update(G.adj[u])
                dlcs.append(DLC(tuple(path), frozenset(members)))
    cover = [0] * G.n
    for c in dlcs:
        for v in c.members:
            cover[v] += 1
    return DLCFamily(diam, tuple(dlcs), max(cover, default=0),
                     min((len(c.members) for c in dlcs), default=0))


def dlc_hypergraph(G: Graph, family: DLCFamily) -> Hypergraph:
    """Vertices are caterpillars; vertex v of G gives the edge of caterpillars containing v."""
    edges = []
    for v in range(G.n):
        e = frozenset(i for i, c in enumerate(family.dlcs) if v in c.members)
        if not e:
            raise EmptyEdge(f"vertex {v} lies in no caterpillar")
        edges.append(e)
    return Hypergraph(len(family.dlcs), tuple(edges))


def vertex_transitive_formula(n: int, degree: int, diam: int) -> float:
    d = degree * diam
    if d <= 1:
        return float(n)
    return 3 * n * math.log2(d) / d


def dlc_cover_bound(G: Graph, orbit_limit: int = DEFAULT_LIMIT,
                    vertex_transitive: bool | None = None) -> BoundCertificate:
    """Upper bound 5 * (greedy number of caterpillars covering V)."""
    if not is_connected(G):
        raise Disconnected("caterpillar cover needs a connected graph")
    if G.min_degree != G.max_degree:
        raise NotRegular("caterpillar cover bound is stated for regular graphs")
    if vertex_transitive is None and G.n <= orbit_limit:
        vertex_transitive = is_vertex_transitive(G, orbit_limit)
    family = dlc_enumerate(G)
    H = dlc_hypergraph(G, family)
    report = blocking_greedy(H)
    covered = set().union(*(family.dlcs[i].members for i in report.chosen))
    if len(covered) != G.n:
        raise InvariantViolation("chosen caterpillars do not cover every vertex")
    m = G.max_degree
    return BoundCertificate(
        Kind.DLC_UPPER,
        {"degree": m, "diameter": family.diameter},
        Fraction(5 * report.size),
        {
            "tau_greedy": report.size,
            "tau_star": str(report.tau_star),
            "chosen_paths": [list(family.dlcs[i].path) for i in report.chosen],
            "dlc_count": len(family.dlcs),
            "mu1": family.mu1,
            "mu2": family.mu2,
            "d": m * family.diameter,
            "formula_bound": vertex_transitive_formula(G.n, m, family.diameter),
            "vertex_transitive": vertex_transitive,
        },
    )
