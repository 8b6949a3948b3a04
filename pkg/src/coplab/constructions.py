"""Builders for projective-plane graphs, spanning families, products and covers."""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .counting import profile_vector, profiles
from .errors import (
    BadVectorLength,
    CycleTooShort,
    DegenerateDegree,
    DisconnectedSplit,
    EvenOrder,
    IndexOutOfRange,
    InvariantViolation,
    ModeHypothesisViolated,
    NotC4Free,
    NotFactorizable,
    VectorOutOfRange,
)
from .fields import field
from .graph import (
    Graph,
    bipartition,
    components,
    count_cycles,
    girth,
    is_c4_free,
    is_connected,
    second_neighborhood,
    triangles,
)

Edge = tuple[int, int]


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantViolation(msg)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------- planes

@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, ...], ...]
    # normal vector of each line, in the same normalized form as points
    line_coords: tuple[tuple[int, int, int], ...]

    @property
    def order(self) -> int:
        return len(self.points)


def _normalized_triples(q: int) -> list[tuple[int, int, int]]:
    out = []
    for t in product(range(q), repeat=3):
        nz = [c for c in t if c]
        if nz and nz[0] == 1:
            out.append(t)
    return out


def check_plane(P: ProjectivePlane) -> None:
    q = P.q
    N = q * q + q + 1
    _check(len(P.points) == N and len(P.lines) == N, "wrong number of points/lines")
    _check(all(len(L) == q + 1 for L in P.lines), "line of wrong size")
    on = Counter(x for L in P.lines for x in L)
    _check(all(on[x] == q + 1 for x in range(N)), "point on wrong number of lines")
    pairs = Counter(pair for L in P.lines for pair in combinations(L, 2))
    _check(len(pairs) == N * (N - 1) // 2 and max(pairs.values()) == 1,
           "two points do not determine a unique line")


def projective_plane(q: int) -> ProjectivePlane:
    """PG(2, q) over the field with q elements."""
    F = field(q)
    pts = _normalized_triples(q)
    lines = tuple(
        tuple(i for i, x in enumerate(pts) if F.dot(a, x) == 0) for a in pts
    )
    P = ProjectivePlane(q=q, points=tuple(pts), lines=lines, line_coords=tuple(pts))
    check_plane(P)
    return P


def incidence_graph(P: ProjectivePlane) -> Graph:
    """Points are vertices ``0..N-1``, lines are ``N..2N-1``."""
    N = P.order
    return Graph.from_edges(2 * N, ((x, N + j) for j, L in enumerate(P.lines) for x in L))


def incidence_labels(P: ProjectivePlane) -> dict[int, dict]:
    N = P.order
    labels = {x: {"type": "point", "coords": list(c)} for x, c in enumerate(P.points)}
    labels.update({N + j: {"type": "line", "coords": list(c)}
                   for j, c in enumerate(P.line_coords)})
    return labels


def polarity_graph(q: int) -> Graph:
    """Orthogonal-polarity graph: points x ~ y iff x . y = 0 and x != y."""
    F = field(q)
    pts = _normalized_triples(q)
    edges = [(i, j) for i, j in combinations(range(len(pts)), 2)
             if F.dot(pts[i], pts[j]) == 0]
    return Graph.from_edges(len(pts), edges)


# ---------------------------------------------------------------- factors

@dataclass(frozen=True)
class FactorDecomposition:
    r: int
    factors: tuple[frozenset[Edge], ...]


def _perfect_matching(n: int, left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Kuhn's augmenting-path matching, lowest-index first; returns left->right."""
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_r or augment(match_r[v], seen):
                match_r[v] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            raise NotFactorizable("no perfect matching")
    return {u: v for v, u in match_r.items()}


def _one_factorize(left: list[int], adj: dict[int, list[int]], k: int) -> list[list[Edge]]:
    adj = {u: list(vs) for u, vs in adj.items()}
    out = []
    for _ in range(k):
        m = _perfect_matching(len(left), left, adj)
        out.append([(u, v) for u, v in sorted(m.items())])
        for u, v in m.items():
            adj[u].remove(v)
    return out


def _euler_orientation(G: Graph) -> list[Edge]:
    """Orient every edge along an Euler circuit of its component."""
    remaining = [list(a) for a in G.adj]
    used: set[Edge] = set()
    arcs: list[Edge] = []
    for comp in components(G):
        start = comp[0]
        if not remaining[start]:
            continue
        stack, circuit = [start], []
        while stack:
            u = stack[-1]
            while remaining[u] and _edge(u, remaining[u][0]) in used:
                remaining[u].pop(0)
            if remaining[u]:
                v = remaining[u].pop(0)
                used.add(_edge(u, v))
                stack.append(v)
            else:
                circuit.append(stack.pop())
        circuit.reverse()
        arcs.extend(zip(circuit, circuit[1:]))
    return arcs


def factorize(G: Graph, r: int) -> FactorDecomposition:
    """1-factorization of a regular bipartite graph, or 2-factorization of an
    even-regular graph (Euler orientation + bipartite split)."""
    k = G.max_degree
    if G.min_degree != k or k == 0:
        raise NotFactorizable("graph is not regular of positive degree")
    if r == 1:
        color = bipartition(G)
        if color is None:
            raise NotFactorizable("1-factorization requires a bipartite graph")
        left = [u for u in range(G.n) if color[u] == 0]
        matchings = _one_factorize(left, {u: list(G.adj[u]) for u in left}, k)
        factors = [frozenset(_edge(u, v) for u, v in m) for m in matchings]
    elif r == 2:
        if k % 2:
            raise NotFactorizable("2-factorization requires even degree")
        arcs = _euler_orientation(G)
        out_adj: dict[int, list[int]] = {u: [] for u in range(G.n)}
        for u, v in arcs:
            out_adj[u].append(v)
        for u in out_adj:
            out_adj[u].sort()
        matchings = _one_factorize(list(range(G.n)), out_adj, k // 2)
        factors = [frozenset(_edge(u, v) for u, v in m) for m in matchings]
    else:
        raise NotFactorizable("only r = 1 or r = 2 are supported")
    F = FactorDecomposition(r=r, factors=tuple(factors))
    _check(sum(len(f) for f in factors) == G.edge_count and
           frozenset().union(*factors) == frozenset(G.edges()), "factors do not partition E(G)")
    for f in factors:
        deg = Counter(x for e in f for x in e)
        _check(len(deg) == G.n and set(deg.values()) == {r}, "factor is not r-regular")
    return F


def strip_factors(G: Graph, F: FactorDecomposition, i: int, eps: float) -> Graph:
    """Remove the first ``i`` factors; ``1 <= i <= floor(eps * k / r)``."""
    k = G.max_degree
    top = math.floor(Fraction(eps) * k / F.r)
    if not 1 <= i <= top:
        raise IndexOutOfRange(f"i={i} outside 1..{top} (eps={eps}, k={k}, r={F.r})")
    drop = frozenset().union(*F.factors[:i])
    H = G.remove_edges(drop)
    _check(H.min_degree == H.max_degree == k - F.r * i, "stripped graph is not regular")
    return H


# ---------------------------------------------------------------- deletion vectors

@dataclass(frozen=True)
class DeletionVector:
    entries: tuple[int, ...]
    anchor: int
    targets: tuple[int, ...]


def anchor_and_targets(G: Graph, eps: float) -> tuple[int, tuple[int, ...]]:
    """Lowest-index minimum-degree vertex and its ceil(eps*delta) lowest neighbors."""
    delta = G.min_degree
    v = G.degrees().index(delta)
    a = math.ceil(Fraction(eps) * delta)
    return v, G.adj[v][:a]


def deletion_vector(G: Graph, entries, eps: float = 0.5) -> DeletionVector:
    v, targets = anchor_and_targets(G, eps)
    entries = tuple(entries)
    if len(entries) != len(targets):
        raise BadVectorLength(f"need {len(targets)} entries, got {len(entries)}")
    return DeletionVector(entries=entries, anchor=v, targets=targets)


def neighborhood_deletion(G: Graph, x: DeletionVector) -> Graph:
    """Delete ``x_i`` edges from each target into the second neighborhood."""
    if not is_c4_free(G):
        raise NotC4Free("neighborhood deletion needs a C4-free host")
    if len(x.entries) != len(x.targets):
        raise BadVectorLength("entries and targets differ in length")
    n2 = second_neighborhood(G, x.anchor)
    drop = []
    for vi, xi in zip(x.targets, x.entries):
        if not 0 <= xi <= G.degree(vi) - 3:
            raise VectorOutOfRange(f"x_i={xi} at vertex {vi} outside 0..deg-3")
        outward = [w for w in G.adj[vi] if w in n2]
        drop.extend((vi, w) for w in outward[:xi])
    H = G.remove_edges(drop)
    for vi, xi in zip(x.targets, x.entries):
        _check(H.degree(vi) == G.degree(vi) - xi, "target degree mismatch")
    _check(is_connected(H) or not is_connected(G), "deletion disconnected the graph")
    return H


def spanning_profile_family(G: Graph, eps: float = 0.5, mode: str = "girth5",
                            max_count: int | None = None) -> list[Graph]:
    """One spanning subgraph per degree profile of the trimmed targets.

    ``mode`` is ``"girth5"`` (targets keep delta-1 outward edges) or
    ``"c4free"`` (edges inside N(anchor) are dropped first, targets keep
    delta-2 outward edges).
    """
    if mode == "girth5":
        if girth(G) < 5:
            raise ModeHypothesisViolated("girth5 mode requires girth >= 5")
        d = G.min_degree - 1
    elif mode == "c4free":
        if not is_c4_free(G):
            raise ModeHypothesisViolated("c4free mode requires a C4-free graph")
        d = G.min_degree - 2
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1:
        raise DegenerateDegree(f"d = {d} < 1")
    v, targets = anchor_and_targets(G, eps)
    if not targets:
        raise DegenerateDegree("no targets selected")
    first = G.neighbors(v)
    base = G.remove_edges([(x, y) for x, y in combinations(sorted(first), 2) if G.has_edge(x, y)])
    n2 = second_neighborhood(G, v)
    kept: dict[int, list[int]] = {}
    trim = []
    for t in targets:
        outward = [w for w in base.adj[t] if w in n2]
        kept[t] = outward[:d]
        trim.extend((t, w) for w in outward[d:])
    base = base.remove_edges(trim)

    out: list[Graph] = []
    for prof in profiles(len(targets), d):
        if max_count is not None and len(out) >= max_count:
            break
        x = profile_vector(prof)
        drop = [(t, w) for t, xi in zip(targets, x) for w in kept[t][:xi]]
        H = base.remove_edges(drop)
        _check(is_connected(H), "profile member is disconnected")
        out.append(H)
    multisets = {tuple(sorted(H.degrees())) for H in out}
    _check(len(multisets) == len(out), "profile members share a degree multiset")
    return out


def triangle_trim(G: Graph, t_prime: int, a) -> Graph:
    """Break the first ``t - t_prime`` triangles (sorted order) by one edge each.

    ``a_i`` picks the edge of triangle ``x<y<z``: 0 -> xy, 1 -> yz, 2 -> xz.
    """
    if not is_c4_free(G):
        raise NotC4Free("triangle trimming needs a C4-free graph")
    tris = triangles(G)
    a = list(a)
    if not 0 <= t_prime <= len(tris):
        raise BadVectorLength(f"t' = {t_prime} outside 0..{len(tris)}")
    if len(a) != len(tris) - t_prime:
        raise BadVectorLength(f"need {len(tris) - t_prime} entries, got {len(a)}")
    drop = []
    for (x, y, z), ai in zip(tris, a):
        if ai not in (0, 1, 2):
            raise VectorOutOfRange(f"entry {ai} not in {{0,1,2}}")
        drop.append(((x, y), (y, z), (x, z))[ai])
    H = G.remove_edges(drop)
    _check(count_cycles(H, 3) == t_prime, "wrong number of triangles remain")
    _check(2 * H.min_degree >= G.min_degree, "minimum degree fell below half")
    return H


# ---------------------------------------------------------------- products and covers

def lex_product(G: Graph, H: Graph) -> Graph:
    """Vertex ``(u, v)`` is ``u * |H| + v``."""
    h = H.n
    edges = []
    for u, x in G.edges():
        edges.extend((u * h + v, x * h + y) for v in range(h) for y in range(h))
    for u in range(G.n):
        edges.extend((u * h + v, u * h + y) for v, y in H.edges())
    return Graph.from_edges(G.n * h, edges)


def double_cover(G: Graph) -> Graph:
    """Bipartite double cover; vertex ``(v, a)`` is ``v + a * n``."""
    n = G.n
    edges = []
    for u, v in G.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph.from_edges(2 * n, edges)


def cover_projection(n: int, w: int) -> tuple[int, int]:
    return w % n, w // n


def split_lines(P: ProjectivePlane, seed: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Halve every line: shuffle its sorted points, alternate into (B', B'')."""
    rng = random.Random(seed)
    halves = []
    for L in P.lines:
        pts = sorted(L)
        rng.shuffle(pts)
        halves.append((tuple(sorted(pts[0::2])), tuple(sorted(pts[1::2]))))
    return halves


def bf_graph(q: int, m: int, split_seed: int = 0) -> Graph:
    """Blow-up of the oriented m-cycle by half-lines of PG(2, q).

    Block vertex ``(u, B)`` is ``u*N + B``; point vertex ``(e, x)`` is
    ``m*N + e*N + x`` where edge ``e`` runs from cycle vertex e to e+1.
    """
    if q % 2 == 0:
        raise EvenOrder("q must be odd so lines split into equal halves")
    if m < 3:
        raise CycleTooShort("m must be at least 3")
    P = projective_plane(q)
    N = P.order
    halves = split_lines(P, split_seed)
    edges = []
    for u in range(m):
        out_e, in_e = u, (u - 1) % m
        for B, (first, second) in enumerate(halves):
            block = u * N + B
            edges.extend((block, m * N + out_e * N + x) for x in first)
            edges.extend((block, m * N + in_e * N + x) for x in second)
    G = Graph.from_edges(2 * N * m, edges)
    if not is_connected(G):
        raise DisconnectedSplit(f"split seed {split_seed} gives a disconnected BF({q},{m})")
    _check(G.n == 2 * N * m, "BF order")
    _check(G.edge_count == N * (q + 1) * m, "BF edge count")
    _check(G.min_degree == G.max_degree == q + 1, "BF regularity")
    _check(is_c4_free(G), "BF contains a C4")
    return G


def bf_labels(q: int, m: int) -> dict[int, dict]:
    N = q * q + q + 1
    labels = {u * N + B: {"type": "block", "cycle_vertex": u, "line": B}
              for u in range(m) for B in range(N)}
    labels.update({m * N + e * N + x: {"type": "point", "cycle_edge": [e, (e + 1) % m], "point": x}
                   for e in range(m) for x in range(N)})
    return labels
