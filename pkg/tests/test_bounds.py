import json
import random

import pytest
from hypothesis import given

from intervaltotal import graph as G
from intervaltotal.bounds import (
    bound_report,
    complete_bipartite_parts,
    known_chi_double_prime,
    known_exact_values,
)
from intervaltotal.graph import FamilySpec, Graph, ParameterError

from oracles import brute_max_shortest_path_degree_sum, random_connected_graph
from strategies import graphs


def _values(report):
    return {b.name: b.value for b in report if b.applicable}


def test_cycle6_report():
    v = _values(bound_report(G.cycle(6)))
    assert v["twice_order_minus_one"] == 11
    assert v["regular_twice_order_minus_three"] == 9
    assert v["shortest_path_degree_sum"] == 9
    assert v["diameter_times_degree"] == 9
    assert v["order_plus_size"] == 12
    assert v["max_degree_plus_one"] == 3
    assert v["regular_bipartite"] == 4
    assert "unique_universal_vertex" not in v
    assert "tree" not in v


def test_wheel6_universal_vertex_bound(wheel6):
    b = bound_report(wheel6)["unique_universal_vertex"]
    assert b.applicable and b.value == 12
    assert "k(G)=3" in b.ref


def test_k4_diameter_bound():
    r = bound_report(G.complete(4))
    assert r["diameter_times_degree"].value == 7
    assert not r["unique_universal_vertex"].applicable  # every vertex is universal


def test_regular_bound_needs_enough_vertices():
    # K_4 is 3-regular on 4 < 8 vertices
    assert not bound_report(G.complete(4))["regular_twice_order_minus_three"].applicable
    assert bound_report(G.cycle(5))["regular_twice_order_minus_three"].value == 7
    assert not bound_report(G.cycle(5))["regular_twice_order_minus_three"].applicable


def test_disconnected_graph_marks_connected_bounds_inapplicable():
    r = bound_report(Graph(4, ((0, 1), (2, 3))))
    for name in ("twice_order_minus_one", "shortest_path_degree_sum", "diameter_times_degree"):
        assert not r[name].applicable
    assert r["order_plus_size"].applicable


def test_tree_and_complete_bipartite_bounds():
    r = bound_report(G.complete_bipartite(2, 3))
    assert r["complete_bipartite"].applicable and r["complete_bipartite"].value == 6
    assert r["complete_bipartite"].kind == "lower"
    assert r["tree"].applicable is False
    star = bound_report(G.complete_bipartite(1, 4))
    assert star["tree"].value == 6


def test_complete_bipartite_detection_is_structural():
    # K_{2,2} handed in as a relabeled 4-cycle
    assert complete_bipartite_parts(G.cycle(4)) == (2, 2)
    assert complete_bipartite_parts(G.cycle(6)) is None
    assert complete_bipartite_parts(G.path(3)) in ((1, 2), (2, 1))


def test_report_json_and_table():
    r = bound_report(G.wheel(7))
    data = json.loads(json.dumps(r.to_json()))
    assert set(data[0]) == {"name", "kind", "target", "value", "applicable", "ref"}
    table = r.to_table()
    assert table.splitlines()[0].startswith("name")
    assert len(table.splitlines()) == len(data) + 2


@pytest.mark.parametrize("spec, value", [(FamilySpec("cycle", n=6), 3), (FamilySpec("cycle", n=7), 4), (FamilySpec("complete", n=6), 7), (FamilySpec("complete", n=5), 5)])
def test_known_chi_double_prime(spec, value):
    assert known_chi_double_prime(spec) == value


def test_known_chi_double_prime_unsupported():
    with pytest.raises(ParameterError):
        known_chi_double_prime(FamilySpec("wheel", n=6))


def test_known_exact_values_examples():
    v = known_exact_values(FamilySpec("wheel", n=7))
    assert (v.w_tau, v.W_tau, v.spectrum_ranges) == (7, 10, ((7, 10),))
    v = known_exact_values(FamilySpec("wheel", n=9))
    assert (v.w_tau, v.W_tau) == (9, 13)
    v = known_exact_values(FamilySpec("path", n=4))
    assert (v.w_tau, v.W_tau) == (None, 7)
    with pytest.raises(ParameterError):
        known_exact_values(FamilySpec("tree_random", n=5))


def _chain(spec: FamilySpec):
    g = G.generate(spec)
    vals = known_exact_values(spec)
    report = bound_report(g)
    lo = G.max_degree(g) + 1
    if spec.family in ("cycle", "complete"):
        chi = known_chi_double_prime(spec)
        assert lo <= chi
        lo = chi
    if vals.w_tau is not None:
        assert lo <= vals.w_tau <= vals.W_tau
        for b in report.applicable("upper", "w_tau"):
            assert vals.w_tau <= b.value, b.name
    assert vals.W_tau <= report.best_upper()
    for b in report.applicable("upper", "W_tau"):
        assert vals.W_tau <= b.value, b.name


def test_consistency_chain():
    for n in range(3, 51):
        _chain(FamilySpec("cycle", n=n))
        _chain(FamilySpec("path", n=n))
    for n in (1, 2):
        _chain(FamilySpec("path", n=n))
    for n in range(1, 21):
        _chain(FamilySpec("complete", n=n))
    for n in range(4, 31):
        _chain(FamilySpec("wheel", n=n))


def test_wheel_upper_bound_is_n_plus_6():
    for n in range(5, 31):
        assert bound_report(G.wheel(n))["unique_universal_vertex"].value == n + 6


def test_even_cycle_diameter_bound_is_loose():
    # the diameter bound gives n+3 on even cycles, the exact value is n+2
    for n in range(4, 21, 2):
        assert bound_report(G.cycle(n))["diameter_times_degree"].value == n + 3
        assert known_exact_values(FamilySpec("cycle", n=n)).W_tau == n + 2


def test_path_sum_dominated_by_diameter_bound():
    rng = random.Random(9)
    for _ in range(200):
        r = bound_report(random_connected_graph(rng, max_n=9))
        assert r["shortest_path_degree_sum"].value <= r["diameter_times_degree"].value


@given(graphs(max_n=8, connected=True))
def test_path_sum_bound_matches_brute_force(g):
    assert bound_report(g)["shortest_path_degree_sum"].value == 1 + brute_max_shortest_path_degree_sum(g)
