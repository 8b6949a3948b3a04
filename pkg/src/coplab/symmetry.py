"""Isomorphism and automorphism orbits by color refinement plus backtracking."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .errors import SizeExceeded
from .graph import Graph

DEFAULT_LIMIT = 64


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors`` (1-dimensional WL)."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[x], tuple(sorted(Counter(colors[y] for y in adj[x]).items())))
            for x in range(len(adj))
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(index) == ncolors:
            return new
        colors, ncolors = new, len(index)


class _PairSearch:
    """Backtracking search for an isomorphism G -> H on their disjoint union."""

    def __init__(self, G: Graph, H: Graph):
        self.G, self.H = G, H
        self.n = G.n
        self.adj = list(G.adj) + [tuple(v + G.n for v in row) for row in H.adj]

    def run(self, fixed: Sequence[tuple[int, int]] = ()) -> list[int] | None:
        colors = [0] * (2 * self.n)
        for i, (x, y) in enumerate(fixed, start=1):
            colors[x] = colors[self.n + y] = i
        return self._search(colors)

    def _search(self, colors: list[int]) -> list[int] | None:
        colors = _refine(self.adj, colors)
        n = self.n
        cells: dict[int, tuple[list[int], list[int]]] = {}
        for x in range(2 * n):
            left, right = cells.setdefault(colors[x], ([], []))
            (left if x < n else right).append(x if x < n else x - n)
        target = None
        for c in sorted(cells):
            left, right = cells[c]
            if len(left) != len(right):
                return None
            if len(left) > 1 and (target is None or len(left) < len(cells[target][0])):
                target = c
        if target is None:
            mapping = [0] * n
            for left, right in cells.values():
                mapping[left[0]] = right[0]
            return mapping if self._is_iso(mapping) else None
        fresh = max(colors) + 1
        left, right = cells[target]
        x = left[0]
        for y in right:
            trial = list(colors)
            trial[x] = trial[n + y] = fresh
            found = self._search(trial)
            if found is not None:
                return found
        return None

    def _is_iso(self, mapping: list[int]) -> bool:
        H = self.H
        return all(H.has_edge(mapping[u], mapping[v]) for u, v in self.G.edges())


def _check_size(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise SizeExceeded(f"graph has {G.n} vertices, limit is {limit}")


def find_isomorphism(G: Graph, H: Graph, limit: int = DEFAULT_LIMIT,
                     fixed: Sequence[tuple[int, int]] = ()) -> list[int] | None:
    """Return ``phi`` with ``u ~ v`` in G iff ``phi[u] ~ phi[v]`` in H, or None."""
    _check_size(G, limit)
    _check_size(H, limit)
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return None
    return _PairSearch(G, H).run(fixed)


def are_isomorphic(G: Graph, H: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    return find_isomorphism(G, H, limit) is not None


def vertex_orbits(G: Graph, limit: int = DEFAULT_LIMIT) -> list[list[int]]:
    """Orbits of Aut(G) on vertices, each sorted, ordered by smallest member."""
    _check_size(G, limit)
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    base = _refine(G.adj, [0] * G.n)
    search = _PairSearch(G, G)
    reps: list[int] = []
    for v in range(G.n):
        placed = False
        for r in reps:
            if base[r] != base[v]:
                continue
            if find(r) == find(v):
                placed = True
                break
            sigma = search.run([(r, v)])
            if sigma is not None:
                for x, y in enumerate(sigma):
                    a, b = find(x), find(y)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                placed = True
                break
        if not placed:
            reps.append(v)
    orbits: dict[int, list[int]] = {}
    for v in range(G.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())


def is_vertex_transitive(G: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    return len(vertex_orbits(G, limit)) <= 1
