"""Immutable simple graphs, structural metrics and the edge-list format."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EdgeListError, InvalidGraph

INF = math.inf


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as a tuple of sorted neighbor tuples. Instances are
    immutable and hashable on their edge set, so they can be shared freely.
    """

    __slots__ = ("n", "adj", "edge_count", "_nbr_sets", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise InvalidGraph(f"adjacency has {len(adj)} rows for n={n}")
        rows = tuple(tuple(sorted(a)) for a in adj)
        sets = tuple(frozenset(r) for r in rows)
        total = 0
        for u, row in enumerate(rows):
            if len(sets[u]) != len(row):
                raise InvalidGraph(f"repeated neighbor at vertex {u}")
            if u in sets[u]:
                raise InvalidGraph(f"loop at vertex {u}")
            for v in row:
                if not 0 <= v < n or u not in sets[v]:
                    raise InvalidGraph(f"asymmetric or out-of-range edge {u}-{v}")
            total += len(row)
        self.n = n
        self.adj = rows
        self.edge_count = total // 2
        self._nbr_sets = sets
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge {u}-{v} out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbors(self, u: int) -> frozenset[int]:
        return self._nbr_sets[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {frozenset(e) for e in edges}
        return Graph.from_edges(self.n, (e for e in self.edges() if frozenset(e) not in drop))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------- small graphs

def empty_graph(n: int) -> Graph:
    return Graph(n, [()] * n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraph("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for i in range(n):
        for j in jumps:
            v = (i + j) % n
            if v != i:
                edges.add((min(i, v), max(i, v)))
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------- traversal

def bfs_distances(G: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in G.adj[u]:
            if dist[v] == INF:
                dist[v] = du
                queue.append(v)
    return dist


def distance_matrix(G: Graph) -> list[list[float]]:
    return [bfs_distances(G, s) for s in range(G.n)]


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return all(d != INF for d in bfs_distances(G, 0))


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in G.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def bipartition(G: Graph) -> list[int] | None:
    """Return a 0/1 coloring if G is bipartite, else None."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in G.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def girth(G: Graph) -> float:
    """Length of a shortest cycle, or ``INF`` for a forest.

    One BFS per vertex; a non-tree edge u-v seen from root s closes a walk of
    length dist(u)+dist(v)+1 that contains a cycle no longer than that, and
    the minimum over all roots is attained by a root lying on a shortest cycle.
    """
    best = INF
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in G.adj[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def second_neighborhood(G: Graph, v: int) -> set[int]:
    first = G.neighbors(v)
    return {w for u in first for w in G.adj[u] if w != v and w not in first}


# ---------------------------------------------------------------- metrics

@dataclass(frozen=True)
class Metrics:
    n: int
    edge_count: int
    min_degree: int
    max_degree: int
    diameter: float
    girth: float
    connected: bool
    degree_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree

    def as_dict(self) -> dict:
        def enc(x):
            return "inf" if x == INF else int(x)

        return {
            "n": self.n,
            "edges": self.edge_count,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "connected": self.connected,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
        }


def diameter(G: Graph) -> float:
    best = 0
    for s in range(G.n):
        best = max(best, max(bfs_distances(G, s)))
        if best == INF:
            return INF
    return best


def metrics(G: Graph) -> Metrics:
    degs = G.degrees()
    diam = diameter(G)
    return Metrics(
        n=G.n,
        edge_count=G.edge_count,
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        diameter=diam,
        girth=girth(G),
        connected=diam != INF,
        degree_histogram=dict(Counter(degs)),
    )


def is_k2t_free(G: Graph, t: int) -> bool:
    """True iff no two distinct vertices have ``t`` or more common neighbors."""
    if t < 1:
        raise ValueError("t must be positive")
    # count common neighbors by walking paths of length two
    for u in range(G.n):
        common: Counter[int] = Counter()
        for w in G.adj[u]:
            for v in G.adj[w]:
                if v > u:
                    common[v] += 1
        if common and max(common.values()) >= t:
            return False
    return True


def is_c4_free(G: Graph) -> bool:
    return is_k2t_free(G, 2)


# ---------------------------------------------------------------- cycle census

@dataclass(frozen=True)
class CycleCensus:
    c3: int
    c4: int
    c6: int


def count_cycles(G: Graph, length: int) -> int:
    """Number of cycle subgraphs of the given length.

    Each cycle is reached once: from its smallest vertex, through larger
    vertices only, in the direction whose second vertex is below the last.
    """
    if length < 3:
        raise ValueError("cycles have length >= 3")
    total = 0
    adj = G.adj
    for s in range(G.n):
        on_path = [False] * G.n
        on_path[s] = True
        path = [s]

        def extend(u: int) -> None:
            nonlocal total
            if len(path) == length:
                if G.has_edge(u, s) and path[1] < u:
                    total += 1
                return
            for w in adj[u]:
                if w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    extend(w)
                    path.pop()
                    on_path[w] = False

        extend(s)
    return total


def cycle_census(G: Graph) -> CycleCensus:
    return CycleCensus(count_cycles(G, 3), count_cycles(G, 4), count_cycles(G, 6))


def triangles(G: Graph) -> list[tuple[int, int, int]]:
    """All triangles as sorted triples, in lexicographic order."""
    out = []
    for x in range(G.n):
        for y in G.adj[x]:
            if y <= x:
                continue
            for z in G.adj[y]:
                if z > y and G.has_edge(x, z):
                    out.append((x, y, z))
    return out


# ---------------------------------------------------------------- edge-list IO

def format_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise EdgeListError("header must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise EdgeListError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(pairs)}")
    seen = set()
    for u, v in pairs:
        if u == v:
            raise EdgeListError(f"loop {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge {u} {v} out of range")
        key = frozenset((u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {u} {v}")
        seen.add(key)
    return Graph.from_edges(n, pairs)


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edgelist(G))
