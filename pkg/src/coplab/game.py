"""Exact Cops and Robbers solving by a vectorized backward-induction fixpoint.

Positions are stored densely: an array with one axis per cop plus a final
robber axis. Cops are interchangeable, so the arrays are symmetric in the cop
axes; a simultaneous cop move factors into one "exists a neighbor" pass per
cop axis, each a matrix product with the closed adjacency matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BudgetExceeded, Disconnected, ExceedsKmax
from .graph import Graph, is_connected

DEFAULT_BUDGET = 5 * 10**8
# dense working arrays are float32; this caps one array at ~240 MB
DENSE_CELL_CAP = 6 * 10**7


def state_count(n: int, k: int) -> int:
    """Multiset game states: cop multisets x robber vertex x side to move."""
    return math.comb(n + k - 1, k) * n * 2


def _closed_adjacency(G: Graph) -> np.ndarray:
    A = np.eye(G.n, dtype=np.float32)
    for u, v in G.edges():
        A[u, v] = A[v, u] = 1.0
    return A


def _capture_mask(n: int, k: int) -> np.ndarray:
    cap = np.zeros((n,) * (k + 1), dtype=bool)
    eye = np.eye(n, dtype=bool)
    for i in range(k):
        shape = [1] * (k + 1)
        shape[i] = shape[k] = n
        cap |= eye.reshape(shape)
    return cap


def _dilate_cops(X: np.ndarray, A: np.ndarray, k: int) -> np.ndarray:
    """Y[c, r] = exists c' in N[c] (coordinatewise) with X[c', r]."""
    Y = X.astype(np.float32)
    for axis in range(k):
        Y = np.moveaxis(np.tensordot(A, Y, axes=([1], [axis])), 0, axis)
        np.minimum(Y, 1.0, out=Y)
    return Y > 0


def _dilate_robber(X: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Y[c, r] = exists r' in N[r] with X[c, r']."""
    n = A.shape[0]
    flat = X.reshape(-1, n).astype(np.float32) @ A
    return (flat > 0).reshape(X.shape)


@dataclass
class KCopsResult:
    """Solved game for a fixed number of cops.

    ``cop_win[c, r]`` is true when the cops, to move at cops ``c`` and robber
    ``r``, can force capture; ``robber_turn_win`` is the same with the robber
    to move. Ranks record the round of the fixpoint in which a position
    first became winning; following strictly decreasing ranks is a positional
    winning strategy.
    """

    graph: Graph
    k: int
    cops_win: bool
    cop_win: np.ndarray
    robber_turn_win: np.ndarray
    cop_rank: np.ndarray
    robber_rank: np.ndarray
    rounds: int

    def _nbhd(self, v: int) -> tuple[int, ...]:
        return (v,) + self.graph.adj[v]

    def start_position(self) -> tuple[int, ...] | None:
        """Smallest sorted cop placement that wins against every robber start."""
        good = self.cop_win.all(axis=-1)
        for idx in zip(*np.nonzero(good)):
            if list(idx) == sorted(idx):
                return tuple(int(i) for i in idx)
        return None

    def cop_move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...] | None:
        """Rank-decreasing move from a winning cop-to-move position, else None."""
        if not self.cop_win[tuple(cops) + (robber,)]:
            return None
        best, best_rank = None, None
        for move in product(*(self._nbhd(c) for c in cops)):
            if robber in move:
                return tuple(move)
            if self.robber_turn_win[move + (robber,)]:
                rank = self.robber_rank[move + (robber,)]
                if best_rank is None or rank < best_rank:
                    best, best_rank = move, rank
        return tuple(int(c) for c in best)

    def robber_start(self, cops: tuple[int, ...]) -> int | None:
        row = self.cop_win[tuple(cops)]
        free = np.flatnonzero(~row)
        return int(free[0]) if len(free) else None

    def robber_move(self, cops: tuple[int, ...], robber: int) -> int | None:
        """A move keeping the robber outside the cop-win region, if one exists."""
        row = self.cop_win[tuple(cops)]
        for v in self._nbhd(robber):
            if not row[v]:
                return v
        return None


def solve(G: Graph, k: int, limit: int = DEFAULT_BUDGET) -> KCopsResult:
    """Solve the k-cop game on G exactly."""
    if k < 1:
        raise ValueError("k must be positive")
    if not is_connected(G):
        raise Disconnected("the cop number is defined for connected graphs")
    n = G.n
    if state_count(n, k) > limit:
        raise BudgetExceeded(f"{state_count(n, k)} states exceed budget {limit}")
    if n ** (k + 1) > DENSE_CELL_CAP:
        raise BudgetExceeded(f"dense table n^(k+1) = {n ** (k + 1)} exceeds {DENSE_CELL_CAP}")
    A = _closed_adjacency(G)
    cap = _capture_mask(n, k)
    R = cap.copy()
    robber_rank = np.where(cap, 0, -1).astype(np.int32)
    cop_rank = np.full(cap.shape, -1, dtype=np.int32)
    i = 0
    while True:
        C = cap | _dilate_cops(R, A, k)
        cop_rank[C & (cop_rank < 0)] = i
        new_R = cap | ~_dilate_robber(~C, A)
        if np.array_equal(new_R, R):
            break
        i += 1
        robber_rank[new_R & (robber_rank < 0)] = i
        R = new_R
    cops_win = bool(C.all(axis=-1).any())
    return KCopsResult(G, k, cops_win, C, R, cop_rank, robber_rank, i)


def k_cops_win(G: Graph, k: int, limit: int = DEFAULT_BUDGET) -> bool:
    return solve(G, k, limit).cops_win


def cop_number(G: Graph, kmax: int = 4, limit: int = DEFAULT_BUDGET) -> int:
    """Least k <= kmax such that k cops win; raises ExceedsKmax otherwise."""
    if G.n == 0:
        raise ValueError("empty graph")
    for k in range(1, kmax + 1):
        if k >= G.n or solve(G, k, limit).cops_win:
            return k
    raise ExceedsKmax(kmax)
