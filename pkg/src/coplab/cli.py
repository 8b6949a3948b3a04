"""Command-line front end: ``coplab <verb> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions as con
from .certify import family_audit, girth5_certificate, k2t_certificate
from .counting import profile_count, star_forest, verify_count_lower_bound
from .errors import BudgetExceeded, CoplabError, ExceedsKmax
from .game import DEFAULT_BUDGET, cop_number, solve
from .graph import (
    complete_graph,
    cycle_graph,
    format_edgelist,
    metrics,
    path_graph,
    petersen_graph,
    read_edgelist,
)
from .hypercover import (
    blocking_exact,
    blocking_lp,
    bucket_fractional,
    dlc_cover_bound,
    dlc_enumerate,
    dlc_hypergraph,
    domination_bound,
    neighborhood_hypergraph,
)
from .strategies import (
    GreedyCops,
    SolverCops,
    SolverRobber,
    StationaryRobber,
    evasion_girth5,
    evasion_lowdeg,
    simulate,
)
from .sweep import SweepSpec, run_sweep


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- construct

def _construct(args) -> tuple:
    kind = args.kind
    labels = None
    if kind == "incidence":
        P = con.projective_plane(args.q)
        G, labels = con.incidence_graph(P), con.incidence_labels(P)
    elif kind == "polarity":
        G = con.polarity_graph(args.q)
        labels = {i: list(p) for i, p in enumerate(con.projective_plane(args.q).points)}
    elif kind == "bf":
        G, labels = con.bf_graph(args.q, args.m, args.seed), con.bf_labels(args.q, args.m)
    elif kind == "double-cover":
        base = read_edgelist(args.graph)
        G = con.double_cover(base)
        labels = {v + a * base.n: [v, a] for a in (0, 1) for v in range(base.n)}
    elif kind == "lex":
        A, B = read_edgelist(args.graph), read_edgelist(args.other)
        G = con.lex_product(A, B)
        labels = {u * B.n + v: [u, v] for u in range(A.n) for v in range(B.n)}
    elif kind == "strip":
        base = read_edgelist(args.graph)
        G = con.strip_factors(base, con.factorize(base, args.r), args.i, args.eps)
    elif kind == "deletion":
        base = read_edgelist(args.graph)
        G = con.neighborhood_deletion(base, con.deletion_vector(base, args.x, args.eps))
    elif kind == "profile":
        base = read_edgelist(args.graph)
        fam = con.spanning_profile_family(base, args.eps, args.mode, args.index + 1)
        G = fam[args.index]
    elif kind == "triangle-trim":
        G = con.triangle_trim(read_edgelist(args.graph), args.t_prime, args.a)
    elif kind == "cycle":
        G = cycle_graph(args.n)
    elif kind == "path":
        G = path_graph(args.n)
    elif kind == "complete":
        G = complete_graph(args.n)
    elif kind == "petersen":
        G = petersen_graph()
    else:
        raise ValueError(kind)
    return G, labels


def cmd_construct(args) -> int:
    G, labels = _construct(args)
    if args.out:
        Path(args.out).write_text(format_edgelist(G))
    else:
        sys.stdout.write(format_edgelist(G))
    if args.labels:
        Path(args.labels).write_text(json.dumps(labels or {}, indent=1) + "\n")
    return 0


def cmd_metrics(args) -> int:
    _emit(metrics(read_edgelist(args.graph)).as_dict())
    return 0


def cmd_certify(args) -> int:
    G = read_edgelist(args.graph)
    if args.kind == "k2t":
        cert = k2t_certificate(G, args.t, args.D)
    else:
        cert = girth5_certificate(G, args.D)
    _emit(cert.to_json())
    return 0


def cmd_family_audit(args) -> int:
    rows = []
    with open(args.csv, newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append((int(rec["n"]), int(rec["order"]), Fraction(rec["bound"])))
    audit = family_audit(rows)
    sys.stdout.write(audit.to_csv())
    return 0


def cmd_copnumber(args) -> int:
    G = read_edgelist(args.graph)
    budget = args.budget or DEFAULT_BUDGET
    try:
        c = cop_number(G, args.kmax, budget)
        _emit({"cop_number": c, "kmax": args.kmax})
    except ExceedsKmax:
        _emit({"cop_number": None, "exceeds_kmax": args.kmax})
    return 0


def _cop_strategy(args, G):
    if args.cop == "greedy":
        return GreedyCops(args.cops, args.cop_start)
    if args.cop == "optimal":
        return SolverCops(solve(G, args.cops, args.budget or DEFAULT_BUDGET))
    raise ValueError(f"unknown cop strategy {args.cop!r}")


def _robber_strategy(args, G):
    if args.robber == "stationary":
        return StationaryRobber()
    if args.robber == "optimal":
        return SolverRobber(solve(G, args.cops, args.budget or DEFAULT_BUDGET))
    if args.robber == "evasion_lowdeg":
        return evasion_lowdeg(G, args.t, args.D if args.D is not None else G.min_degree)
    if args.robber == "evasion_girth5":
        return evasion_girth5(G, args.D if args.D is not None else G.min_degree)
    raise ValueError(f"unknown robber strategy {args.robber!r}")


def cmd_simulate(args) -> int:
    G = read_edgelist(args.graph)
    trace = simulate(G, _cop_strategy(args, G), _robber_strategy(args, G), args.rounds)
    if args.trace:
        _emit(trace.to_json(), args.trace)
    _emit({"outcome": trace.outcome, "capture_round": trace.capture_round})
    return 0


def _tau(H) -> int | None:
    try:
        return blocking_exact(H)[0]
    except BudgetExceeded:
        return None


def cmd_cover(args) -> int:
    G = read_edgelist(args.graph)
    if args.mode == "domination":
        rep = domination_bound(G)
        H = neighborhood_hypergraph(G)
        tau_star = blocking_lp(H).objective
        out = {"tau": _tau(H), "greedy_size": rep.size, "bound": rep.bound,
               "witness": {"set": sorted(rep.chosen), "lp_witness": str(rep.lp_witness_value),
                           "total_dominating": rep.total_dominating}}
    elif args.mode == "dlc":
        cert = dlc_cover_bound(G)
        tau_star = Fraction(cert.witness["tau_star"])
        out = {"tau": _tau(dlc_hypergraph(G, dlc_enumerate(G))), "greedy_size": cert.witness["tau_greedy"], "bound": int(cert.bound),
               "witness": cert.witness}
    else:
        rep = bucket_fractional(G, args.omega)
        # a feasible point, so its value bounds the fractional optimum from above
        tau_star = blocking_lp(neighborhood_hypergraph(G)).objective
        out = {"tau": _tau(neighborhood_hypergraph(G)), "greedy_size": None,
               "bound": str(rep.solution.objective),
               "witness": {"degree_buckets": rep.degree_buckets,
                           "weight_buckets": {k: [c, str(s)] for k, (c, s) in rep.weight_buckets.items()},
                           "min_edge_load": str(rep.min_edge_load)}}
    out["tau_star_num"], out["tau_star_den"] = tau_star.numerator, tau_star.denominator
    _emit(out)
    return 0


def cmd_count(args) -> int:
    rep = profile_count(args.a, args.d).as_dict()
    if args.verify:
        J, centers = star_forest(args.a, args.d)
        chk = verify_count_lower_bound(J, centers, args.d)
        rep["verified_classes"] = chk.distinct_classes
        rep["passed"] = chk.passed
    _emit(rep)
    return 0


def cmd_sweep(args) -> int:
    spec = SweepSpec(kind=args.kind, qs=args.q or [], q_max=args.Q, ms=args.m or [3], eps=args.eps,
                     strip_i=args.i, cert=args.cert, t=args.t, exact=args.exact,
                     exact_budget=args.budget or 10**7, seed=args.seed,
                     out_dir=Path(args.out_dir) if args.out_dir else None)
    result = run_sweep(spec)
    sys.stdout.write(result.csv_text)
    return 1 if result.failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coplab", description=__doc__)
    p.add_argument("--seed", type=int, default=0, help="split seed for BF graphs")
    p.add_argument("--budget", type=int, default=None, help="game-state budget")
    p.add_argument("--out-dir", default=None)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("construct", help="build a graph and write an edge list")
    c.add_argument("kind", choices=["incidence", "polarity", "bf", "double-cover", "lex", "strip",
                                    "deletion", "profile", "triangle-trim", "cycle", "path",
                                    "complete", "petersen"])
    c.add_argument("--q", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--graph")
    c.add_argument("--other", help="second factor for lex")
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--i", type=int, default=1)
    c.add_argument("--eps", type=float, default=0.5)
    c.add_argument("--x", type=int, nargs="*", default=[])
    c.add_argument("--mode", choices=["girth5", "c4free"], default="girth5")
    c.add_argument("--index", type=int, default=0)
    c.add_argument("--t-prime", type=int, default=0)
    c.add_argument("--a", type=int, nargs="*", default=[])
    c.add_argument("--out")
    c.add_argument("--labels")
    c.set_defaults(func=cmd_construct)

    m = sub.add_parser("metrics")
    m.add_argument("graph")
    m.set_defaults(func=cmd_metrics)

    ce = sub.add_parser("certify")
    ce.add_argument("graph")
    ce.add_argument("--kind", choices=["k2t", "girth5"], required=True)
    ce.add_argument("--t", type=int, default=2)
    ce.add_argument("--D", type=int, default=None)
    ce.set_defaults(func=cmd_certify)

    fa = sub.add_parser("family-audit", help="CSV with columns n,order,bound")
    fa.add_argument("csv")
    fa.set_defaults(func=cmd_family_audit)

    cn = sub.add_parser("copnumber")
    cn.add_argument("graph")
    cn.add_argument("--kmax", type=int, default=4)
    cn.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    cn.set_defaults(func=cmd_copnumber)

    si = sub.add_parser("simulate")
    si.add_argument("graph")
    si.add_argument("--cop", choices=["greedy", "optimal"], default="greedy")
    si.add_argument("--robber", choices=["stationary", "optimal", "evasion_lowdeg", "evasion_girth5"],
                    default="stationary")
    si.add_argument("--cops", type=int, default=1)
    si.add_argument("--cop-start", type=int, default=0)
    si.add_argument("--t", type=int, default=2)
    si.add_argument("--D", type=int, default=None)
    si.add_argument("--rounds", type=int, default=100)
    si.add_argument("--trace")
    si.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    si.set_defaults(func=cmd_simulate)

    co = sub.add_parser("cover")
    co.add_argument("graph")
    co.add_argument("--mode", choices=["domination", "dlc", "buckets"], default="domination")
    co.add_argument("--omega", type=int, default=2)
    co.set_defaults(func=cmd_cover)

    cc = sub.add_parser("count")
    cc.add_argument("--a", type=int, required=True)
    cc.add_argument("--d", type=int, required=True)
    cc.add_argument("--verify", action="store_true")
    cc.set_defaults(func=cmd_count)

    sw = sub.add_parser("sweep")
    sw.add_argument("--kind", choices=["incidence", "polarity", "bf", "strip"], required=True)
    sw.add_argument("--q", type=int, nargs="+", help="explicit prime powers")
    sw.add_argument("--Q", type=int, help="use every prime power up to Q")
    sw.add_argument("--m", type=int, nargs="*")
    sw.add_argument("--eps", type=float, default=0.5)
    sw.add_argument("--i", type=int, nargs="*")
    sw.add_argument("--cert", choices=["girth5", "k2t"], default="girth5")
    sw.add_argument("--t", type=int, default=2)
    sw.add_argument("--exact", action="store_true")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (CoplabError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
