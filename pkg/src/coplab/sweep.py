"""Family sweeps: build each member, certify it, and tabulate the ratios."""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterator

from . import constructions as con
from .certify import family_audit, FamilyAudit, girth5_certificate, k2t_certificate
from .errors import BudgetExceeded, CoplabError, ExceedsKmax
from .fields import prime_power, prime_powers_upto
from .game import cop_number
from .graph import Graph, metrics, write_edgelist

log = logging.getLogger(__name__)

KINDS = ("incidence", "polarity", "bf", "strip")
COLUMNS = ["index", "kind", "params", "order", "edges", "min_degree", "max_degree", "girth",
           "diameter", "cert", "bound_num", "bound_den", "ratio", "exact_c", "status", "notes"]


@dataclass
class SweepSpec:
    kind: str
    qs: list[int] = field(default_factory=list)
    ms: list[int] = field(default_factory=lambda: [3])
    eps: float = 0.5
    strip_i: list[int] | None = None
    cert: str = "girth5"
    t: int = 2
    exact: bool = False
    exact_budget: int = 10**7
    seed: int = 0
    out_dir: Path | None = None
    q_max: int | None = None

    def __post_init__(self):
        # an upper bound alone selects every usable prime power up to it
        if not self.qs and self.q_max is not None:
            qs = prime_powers_upto(self.q_max)
            self.qs = [q for q in qs if q % 2] if self.kind == "bf" else qs

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown sweep kind {self.kind!r}")
        if not self.qs:
            raise ValueError("empty q range")
        for q in self.qs:
            if prime_power(q) is None:
                raise ValueError(f"{q} is not a prime power")
        if self.kind == "bf":
            if not self.ms or min(self.ms) < 3:
                raise ValueError("bf sweeps need m >= 3")
            if any(q % 2 == 0 for q in self.qs):
                raise ValueError("bf sweeps need odd q")
        if self.cert not in ("girth5", "k2t"):
            raise ValueError(f"unknown certificate kind {self.cert!r}")
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")


@dataclass
class SweepResult:
    rows: list[dict]
    audit: FamilyAudit | None
    csv_text: str

    @property
    def failed(self) -> int:
        return sum(1 for r in self.rows if r["status"] == "FAILED")


def _members(spec: SweepSpec) -> Iterator[tuple[str, dict, Callable[[], Graph]]]:
    for q in spec.qs:
        if spec.kind == "incidence":
            yield f"q={q}", {"q": q}, lambda q=q: con.incidence_graph(con.projective_plane(q))
        elif spec.kind == "polarity":
            yield f"q={q}", {"q": q}, lambda q=q: con.polarity_graph(q)
        elif spec.kind == "bf":
            for m in spec.ms:
                yield (f"q={q};m={m};seed={spec.seed}", {"q": q, "m": m},
                       lambda q=q, m=m: con.bf_graph(q, m, spec.seed))
        elif spec.kind == "strip":
            top = math.floor(Fraction(spec.eps) * (q + 1))
            for i in spec.strip_i or range(1, top + 1):
                yield f"q={q};i={i};eps={spec.eps}", {"q": q, "i": i}, lambda q=q, i=i: _strip(q, i, spec.eps)


def _strip(q: int, i: int, eps: float) -> Graph:
    G = con.incidence_graph(con.projective_plane(q))
    return con.strip_factors(G, con.factorize(G, 1), i, eps)


def _structure_notes(kind: str, params: dict, G: Graph, mt) -> list[str]:
    notes = []
    if kind == "bf":
        q, m = params["q"], params["m"]
        N = q * q + q + 1
        if mt.diameter != 2 * m:
            notes.append(f"diameter {mt.diameter} != 2m={2 * m}")
        if G.n != 2 * N * m or G.edge_count != N * (q + 1) * m:
            notes.append("order/size mismatch")
    return notes


def run_sweep(spec: SweepSpec) -> SweepResult:
    spec.validate()
    rows: list[dict] = []
    audit_rows = []
    if spec.out_dir is not None:
        Path(spec.out_dir).mkdir(parents=True, exist_ok=True)
    for index, (label, params, build) in enumerate(_members(spec)):
        row = {c: "" for c in COLUMNS}
        row.update(index=index, kind=spec.kind, params=label, cert=spec.cert)
        try:
            G = build()
            mt = metrics(G)
            cert = girth5_certificate(G) if spec.cert == "girth5" else k2t_certificate(G, spec.t)
            ratio = float(cert.bound) / math.sqrt(G.n)
            row.update(order=G.n, edges=G.edge_count, min_degree=mt.min_degree,
                       max_degree=mt.max_degree, girth=_fmt(mt.girth), diameter=_fmt(mt.diameter),
                       bound_num=cert.bound.numerator, bound_den=cert.bound.denominator,
                       ratio=f"{ratio:.6f}", status="OK",
                       notes="; ".join(_structure_notes(spec.kind, params, G, mt)))
            if spec.exact:
                try:
                    row["exact_c"] = cop_number(G, cert.cops + 1, spec.exact_budget)
                except (BudgetExceeded, ExceedsKmax):
                    row["exact_c"] = ""
            if spec.out_dir is not None:
                write_edgelist(G, Path(spec.out_dir) / f"{spec.kind}_{index:03d}.edges")
            audit_rows.append((index, G.n, cert.bound))
        except CoplabError as exc:
            log.warning("sweep row %s failed: %s", label, exc)
            row.update(status="FAILED", notes=f"{type(exc).__name__}: {exc}")
        rows.append(row)
    audit = family_audit(audit_rows) if audit_rows else None
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if audit is not None:
        buf.write(f"# family_constant,{audit.constant:.6f},constant_squared,{audit.constant_squared}\n")
    text = buf.getvalue()
    if spec.out_dir is not None:
        (Path(spec.out_dir) / f"sweep_{spec.kind}.csv").write_text(text)
    return SweepResult(rows, audit, text)


def _fmt(x) -> str:
    return "inf" if x == math.inf else str(int(x))
