import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import heawood_graph
from coplab.certify import (
    BoundCertificate,
    Kind,
    exact_certificate,
    family_audit,
    girth5_certificate,
    k2t_certificate,
)
from coplab.constructions import factorize, incidence_graph, projective_plane, strip_factors
from coplab.errors import EmptyFamily, GirthTooSmall, NotK2TFree, NoValidThreshold
from coplab.graph import Graph, complete_graph, cycle_graph, petersen_graph, star_graph


def _pendant_petersen() -> Graph:
    P = petersen_graph()
    return Graph.from_edges(11, P.edges() + [(0, 10)])


def test_k2t_heawood():
    cert = k2t_certificate(heawood_graph(), 2)
    assert cert.params == {"t": 2, "D": 3, "k": 0} and cert.bound == Fraction(3, 2)
    assert cert.kind == Kind.K2T_LOWER and cert.is_lower and cert.cops == 2
    assert cert.verify(heawood_graph())


def test_k2t_stripped_pg4():
    G = incidence_graph(projective_plane(4))
    S = strip_factors(G, factorize(G, 1), 1, 0.5)
    assert S.min_degree == 4
    assert k2t_certificate(S, 2).bound == 2


def test_k2t_refuses_graphs_with_k2t():
    with pytest.raises(NotK2TFree):
        k2t_certificate(star_graph(5), 1)
    with pytest.raises(NotK2TFree):
        k2t_certificate(cycle_graph(4), 2)


def test_girth5_examples():
    assert girth5_certificate(petersen_graph()).bound == 3
    assert girth5_certificate(heawood_graph()).bound == 3
    cert = girth5_certificate(_pendant_petersen())
    assert (cert.params["D"], cert.params["k"], cert.bound) == (3, 1, 2)
    with pytest.raises(GirthTooSmall):
        girth5_certificate(complete_graph(4))


def test_explicit_threshold():
    G = _pendant_petersen()
    assert girth5_certificate(G, D=1).bound == 1
    with pytest.raises(NoValidThreshold):
        girth5_certificate(G, D=4)


def test_json_shape():
    js = k2t_certificate(heawood_graph(), 2).to_json()
    assert set(js) == {"kind", "params", "bound_num", "bound_den", "witness"}
    assert (js["bound_num"], js["bound_den"]) == (3, 2)


def test_exact_certificate():
    cert = exact_certificate(petersen_graph(), 3)
    assert cert.bound == 3 and cert.kind == Kind.EXACT
    upper = BoundCertificate(Kind.DLC_UPPER, {}, Fraction(7, 2))
    assert not upper.is_lower and upper.cops == 3


def _brute_threshold(G: Graph, divisor: int):
    best = None
    for D in range(0, G.max_degree + 2):
        k = sum(1 for d in G.degrees() if d < D)
        if D <= k:
            continue
        b = Fraction(D - k, divisor)
        if G.n - k <= math.ceil(b) - 1:
            continue
        if best is None or b > best:
            best = b
    return best


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=12))
def test_threshold_scan_matches_brute_force(extra):
    # a girth-5 host: Petersen plus pendant paths hanging from it
    P = petersen_graph()
    edges = list(P.edges())
    n = 10
    for a in extra:
        edges.append((a, n))
        n += 1
    G = Graph.from_edges(n, edges)
    assert girth5_certificate(G).bound == _brute_threshold(G, 1)
    assert k2t_certificate(G, 2).bound == _brute_threshold(G, 2)


# ---------------------------------------------------------------- family audit

def test_family_audit_incidence_ratios():
    rows = [(q, 2 * (q * q + q + 1), q + 1) for q in (2, 3, 4, 5)]
    audit = family_audit(rows)
    assert audit.at_least(Fraction(7, 10))
    assert audit.constant_squared == Fraction(36, 62)
    assert [r.order for r in audit.rows] == sorted(r.order for r in audit.rows)


def test_family_audit_degenerate():
    assert family_audit([(1, 1, 1)]).constant == 1
    assert family_audit([(1, 4, 0), (2, 9, 3)]).constant == 0
    with pytest.raises(EmptyFamily):
        family_audit([])


def test_family_audit_csv():
    text = family_audit([(0, 14, 3), (1, 26, 4)]).to_csv()
    assert text.splitlines()[0] == "index,order,bound_num,bound_den,ratio"
    assert text.splitlines()[-1].startswith("# constant,")
