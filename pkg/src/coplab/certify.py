"""Cop-number bound certificates and family ratio audits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import EmptyFamily, GirthTooSmall, NoValidThreshold, NotK2TFree
from .graph import Graph, girth, is_k2t_free


class Kind(str, Enum):
    K2T_LOWER = "K2T_LOWER"
    GIRTH5_LOWER = "GIRTH5_LOWER"
    EXACT = "EXACT"
    HYPER_UPPER = "HYPER_UPPER"
    DLC_UPPER = "DLC_UPPER"


LOWER_KINDS = {Kind.K2T_LOWER, Kind.GIRTH5_LOWER}
UPPER_KINDS = {Kind.HYPER_UPPER, Kind.DLC_UPPER}


@dataclass(frozen=True)
class BoundCertificate:
    kind: Kind
    params: dict
    bound: Fraction
    witness: dict = field(default_factory=dict)

    @property
    def is_lower(self) -> bool:
        return self.kind in LOWER_KINDS

    @property
    def cops(self) -> int:
        """Integer number of cops the bound certifies (ceil for lower bounds)."""
        return math.ceil(self.bound) if self.is_lower else math.floor(self.bound)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": self.params,
            "bound_num": self.bound.numerator,
            "bound_den": self.bound.denominator,
            "witness": self.witness,
        }

    def verify(self, G: Graph) -> bool:
        """Recheck a lower-bound certificate from the graph and its params."""
        if self.kind == Kind.K2T_LOWER:
            again = k2t_certificate(G, self.params["t"], self.params["D"])
        elif self.kind == Kind.GIRTH5_LOWER:
            again = girth5_certificate(G, self.params["D"])
        else:
            raise ValueError(f"{self.kind.value} certificates are verified by their producers")
        return again.bound == self.bound


def _threshold(G: Graph, D: int, divisor: int) -> tuple[int, Fraction] | None:
    degs = G.degrees()
    k = sum(1 for d in degs if d < D)
    if D <= k:
        return None
    bound = Fraction(D - k, divisor)
    # the robber needs an unoccupied start in the high-degree part
    if G.n - k <= math.ceil(bound) - 1:
        return None
    return k, bound


def _candidate_thresholds(G: Graph) -> list[int]:
    return sorted(set(G.degrees()) | {G.max_degree + 1})


def _best_threshold(G: Graph, D: int | None, divisor: int) -> tuple[int, int, Fraction]:
    if D is not None:
        hit = _threshold(G, D, divisor)
        if hit is None:
            raise NoValidThreshold(f"D={D} does not satisfy D > k with a nonempty high part")
        return D, hit[0], hit[1]
    best = None
    for cand in _candidate_thresholds(G):
        hit = _threshold(G, cand, divisor)
        if hit and (best is None or hit[1] > best[2]):
            best = (cand, hit[0], hit[1])
    if best is None:
        raise NoValidThreshold("no degree threshold D with D > k")
    return best


def k2t_certificate(G: Graph, t: int, D: int | None = None) -> BoundCertificate:
    """c(G) >= (D - k)/t for K_{2,t}-free G with k vertices of degree < D."""
    if not is_k2t_free(G, t):
        raise NotK2TFree(f"graph contains K_(2,{t})")
    D, k, bound = _best_threshold(G, D, t)
    return BoundCertificate(
        Kind.K2T_LOWER,
        {"t": t, "D": D, "k": k},
        bound,
        {"k2t_free": True, "high_degree_vertices": G.n - k, "min_degree": G.min_degree},
    )


def girth5_certificate(G: Graph, D: int | None = None) -> BoundCertificate:
    """c(G) >= D - k for G of girth at least 5."""
    g = girth(G)
    if g < 5:
        raise GirthTooSmall(f"girth {g} < 5")
    D, k, bound = _best_threshold(G, D, 1)
    return BoundCertificate(
        Kind.GIRTH5_LOWER,
        {"D": D, "k": k},
        bound,
        {"girth": "inf" if g == math.inf else int(g), "high_degree_vertices": G.n - k},
    )


def exact_certificate(G: Graph, c: int) -> BoundCertificate:
    return BoundCertificate(Kind.EXACT, {}, Fraction(c), {"n": G.n})


# ---------------------------------------------------------------- family audit

@dataclass(frozen=True)
class AuditRow:
    index: int
    order: int
    bound: Fraction

    @property
    def ratio_squared(self) -> Fraction:
        return self.bound * self.bound / self.order

    @property
    def ratio(self) -> float:
        return float(self.bound) / math.sqrt(self.order)


@dataclass(frozen=True)
class FamilyAudit:
    """Rows sorted by order; ``constant`` is the smallest bound/sqrt(order).

    Ratios are irrational in general, so comparisons use the exact squares.
    """

    rows: tuple[AuditRow, ...]

    @property
    def constant_squared(self) -> Fraction:
        return min(r.ratio_squared for r in self.rows)

    @property
    def constant(self) -> float:
        return math.sqrt(self.constant_squared)

    def at_least(self, d) -> bool:
        d = Fraction(d)
        return d <= 0 or self.constant_squared >= d * d

    def to_csv(self) -> str:
        lines = ["index,order,bound_num,bound_den,ratio"]
        for r in self.rows:
            lines.append(f"{r.index},{r.order},{r.bound.numerator},{r.bound.denominator},{r.ratio:.6f}")
        lines.append(f"# constant,{self.constant:.6f}")
        return "\n".join(lines) + "\n"


def family_audit(rows: Iterable[tuple[int, int, Fraction | int]]) -> FamilyAudit:
    rows = [AuditRow(int(n), int(order), Fraction(bound)) for n, order, bound in rows]
    if not rows:
        raise EmptyFamily("no rows to audit")
    if any(r.bound < 0 for r in rows):
        raise ValueError("bounds must be nonnegative")
    rows.sort(key=lambda r: (r.order, r.index))
    return FamilyAudit(tuple(rows))
