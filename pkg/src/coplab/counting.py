"""Degree-profile counting for spanning-subgraph families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, HypothesisViolated
from .graph import Graph


def binary_entropy(x: float) -> float:
    if x <= 0 or x >= 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def profiles(a: int, d: int) -> Iterator[tuple[int, ...]]:
    """All ``(g_0, ..., g_{d-1})`` of nonnegative integers summing to ``a``."""
    if d < 1:
        return
    for bars in combinations(range(a + d - 1), d - 1):
        cuts = (-1,) + bars + (a + d - 1,)
        yield tuple(cuts[i + 1] - cuts[i] - 1 for i in range(d))


def profile_vector(profile: Sequence[int]) -> list[int]:
    """Expand a profile into the nondecreasing deletion vector it counts."""
    out = []
    for value, count in enumerate(profile):
        out.extend([value] * count)
    return out


@dataclass(frozen=True)
class CountReport:
    a: int
    d: int
    exact_count: int
    beta: Fraction
    entropy_estimate: float

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "d": self.d,
            "exact_count": self.exact_count,
            "beta": str(self.beta),
            "entropy_estimate": self.entropy_estimate,
        }


def profile_count(a: int, d: int) -> CountReport:
    if a < 1 or d < 1:
        raise ValueError("a and d must be positive")
    span = a + d - 1
    beta = Fraction(d - 1, span)
    return CountReport(
        a=a,
        d=d,
        exact_count=math.comb(span, d - 1),
        beta=beta,
        entropy_estimate=2.0 ** (span * binary_entropy(float(beta))),
    )


def star_forest(a: int, d: int) -> tuple[Graph, list[int]]:
    """``a`` disjoint stars with ``d`` leaves each; returns graph and centers."""
    edges = []
    centers = []
    for i in range(a):
        c = i * (d + 1)
        centers.append(c)
        edges.extend((c, c + j) for j in range(1, d + 1))
    return Graph.from_edges(a * (d + 1), edges), centers


@dataclass(frozen=True)
class CountCheck:
    a: int
    d: int
    lower_bound: int
    vectors_enumerated: int
    distinct_classes: int
    representatives: list[Graph]

    @property
    def passed(self) -> bool:
        return self.distinct_classes >= self.lower_bound


def verify_count_lower_bound(J: Graph, side_a: Sequence[int], d: int,
                             limit: int = 10**5) -> CountCheck:
    """Brute-force the spanning subgraphs ``J_x`` and count degree classes.

    Each vertex of ``side_a`` is first trimmed to its ``d`` lowest neighbors;
    then every ``x`` in ``{0..d-1}^a`` deletes ``x_i`` more edges at the i-th
    vertex. Graphs with distinct degree multisets are nonisomorphic, so the
    number of distinct multisets is a certified lower bound on the number of
    isomorphism classes.
    """
    side_a = list(side_a)
    a = len(side_a)
    if not 1 <= d <= a:
        raise HypothesisViolated(f"need 1 <= d <= a, got d={d}, a={a}")
    in_a = set(side_a)
    seen: set[int] = set()
    for v in side_a:
        nbrs = J.adj[v]
        if len(nbrs) < d:
            raise HypothesisViolated(f"vertex {v} has degree {len(nbrs)} < {d}")
        if any(w in in_a for w in nbrs):
            raise HypothesisViolated("side A is not independent")
        if seen & set(nbrs):
            raise HypothesisViolated("side-A vertices share a common neighbor")
        seen.update(nbrs)
    if d ** a > limit:
        raise BudgetExceeded(f"{d}^{a} vectors exceed limit {limit}")

    kept = {v: J.adj[v][:d] for v in side_a}
    trim = [(v, w) for v in side_a for w in J.adj[v][d:]]
    base = J.remove_edges(trim)

    def build(x: Sequence[int]) -> Graph:
        drop = [(v, w) for v, xi in zip(side_a, x) for w in kept[v][:xi]]
        return base.remove_edges(drop)

    classes: dict[tuple[int, ...], Graph] = {}
    count = 0
    for x in product(range(d), repeat=a):
        g = build(x)
        classes.setdefault(tuple(sorted(g.degrees())), g)
        count += 1
    return CountCheck(
        a=a,
        d=d,
        lower_bound=math.comb(a + d - 1, d - 1),
        vectors_enumerated=count,
        distinct_classes=len(classes),
        representatives=[build(profile_vector(p)) for p in profiles(a, d)],
    )
