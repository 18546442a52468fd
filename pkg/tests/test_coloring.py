import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from intervaltotal import graph as G
from intervaltotal.coloring import (
    CertificateError,
    PreconditionError,
    TotalColoring,
    certificate_from_json,
    certificate_to_json,
    check_continuity,
    invert,
    palette,
    verify_interval_total,
    verify_total_proper,
)
from intervaltotal.constructions import color_complete_max, color_cycle_min
from intervaltotal.graph import Graph, GraphError
from intervaltotal.search import brute_force_verifier_oracle, exists_coloring

from oracles import perturb, random_coloring, random_graph
from strategies import graphs

K2_GOOD = TotalColoring((1, 3), (2,), 3)


def test_palette_examples(k2):
    assert palette(k2, K2_GOOD, 0) == {1, 2}
    c3 = G.cycle(3)
    assert palette(c3, color_cycle_min(3), 0) == {1, 2, 3}
    lone = Graph(1, ())
    assert palette(lone, TotalColoring((5,), (), 5), 0) == {5}
    with pytest.raises(GraphError):
        palette(k2, K2_GOOD, 2)


def test_cycle6_min_coloring_valid_but_not_with_t4():
    g = G.cycle(6)
    c = color_cycle_min(6)
    assert c.t == 3
    assert verify_interval_total(g, c).valid
    bad = TotalColoring(c.vertex_colors, c.edge_colors, 4)
    out = verify_interval_total(g, bad)
    assert not out.valid
    assert out.clauses() == {"color-unused"}
    assert out.failures[0].colors == (4,)


def test_incidence_violation(k2):
    c = TotalColoring((1, 2), (1,), 2)
    out = verify_interval_total(k2, c)
    assert "incidence" in out.clauses()
    assert any(f.clause == "incidence" and f.vertices == (0,) for f in out.failures)
    assert not brute_force_verifier_oracle(k2, c)


def test_failures_are_exhaustive():
    g = G.path(3)
    # both vertices clash, out of range, and color 2 unused
    c = TotalColoring((1, 1, 1), (9, 9), 3)
    clauses = verify_interval_total(g, c).clauses()
    assert {"proper-vertex", "proper-edge", "palette-interval", "color-unused", "color-out-of-range"} <= clauses


def test_length_mismatch(k2):
    with pytest.raises(CertificateError):
        verify_interval_total(k2, TotalColoring((1, 2), (), 2))
    with pytest.raises(CertificateError):
        verify_total_proper(k2, TotalColoring((1,), (2,), 2))


def test_total_proper_examples(k2):
    k3 = G.complete(3)
    c = TotalColoring((1, 3, 5), (2, 3, 4), 5)
    assert c == color_complete_max(3)
    assert verify_total_proper(k3, c).valid
    assert verify_total_proper(k2, TotalColoring((1, 1), (2,), 2)).clauses() == {"proper-vertex"}
    # proper but not interval: palette {1, 3} has a gap
    loose = TotalColoring((1, 3), (4,), 4)
    assert verify_total_proper(k2, loose).valid
    assert not verify_interval_total(k2, loose).valid


def test_invert_examples(k2):
    assert invert(K2_GOOD) == TotalColoring((3, 1), (2,), 3)
    c = color_cycle_min(6)
    assert invert(invert(c)) == c
    assert verify_interval_total(G.cycle(6), invert(c)).valid


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_invert_is_involution(g, rnd):
    c = random_coloring(rnd, g)
    assert invert(invert(c)) == c
    assert invert(c).t == c.t


def test_inversion_preserves_validity_on_search_witnesses():
    rng = random.Random(3)
    found = 0
    for _ in range(60):
        g = random_graph(rng, max_n=5, p=0.5)
        for t in range(1, g.n + g.m + 1):
            c = exists_coloring(g, t)
            if c is not None:
                found += 1
                assert verify_interval_total(g, invert(c)).valid
    assert found > 50


def test_check_continuity_examples(k2):
    assert check_continuity(k2, K2_GOOD) is True
    for n in range(3, 12):
        assert check_continuity(G.cycle(n), color_cycle_min(n))
    with pytest.raises(PreconditionError, match="connected"):
        check_continuity(Graph(2, ()), TotalColoring((1, 1), (), 1))


def test_check_continuity_names_failed_clauses(k2):
    with pytest.raises(PreconditionError, match="incidence"):
        check_continuity(k2, TotalColoring((1, 2), (1,), 2))
    with pytest.raises(PreconditionError, match="max-color-is-t"):
        check_continuity(k2, TotalColoring((1, 3), (2,), 4))
    with pytest.raises(PreconditionError, match="min-color-is-1"):
        check_continuity(k2, TotalColoring((2, 4), (3,), 4))


def _shifted_colorings(rng: random.Random, tries: int):
    """Search witnesses on random connected graphs at random t."""
    for _ in range(tries):
        g = random_graph(rng, max_n=6, p=0.5)
        if not G.structure_flags(g).connected:
            continue
        t = rng.randint(G.max_degree(g) + 1, g.n + g.m)
        c = exists_coloring(g, t)
        if c is None:
            continue
        yield g, c


def test_continuity_holds_on_random_connected_colorings():
    rng = random.Random(11)
    checked = 0
    for _ in range(300):
        g = random_graph(rng, max_n=6, p=0.5)
        if not G.structure_flags(g).connected or g.m == 0:
            continue
        # random assignment, then keep those satisfying the preconditions
        for _ in range(200):
            c = random_coloring(rng, g)
            if not c.colors() or min(c.colors()) != 1 or max(c.colors()) != c.t:
                continue
            if verify_total_proper(g, c).valid and not any(
                f.clause == "palette-interval" for f in verify_interval_total(g, c).failures
            ):
                assert check_continuity(g, c)
                checked += 1
    for g, c in _shifted_colorings(rng, 200):
        assert check_continuity(g, c)
        checked += 1
    assert checked > 20


def test_palette_span_at_least_max_degree():
    rng = random.Random(5)
    for _ in range(80):
        g = random_graph(rng, max_n=5, p=0.6)
        for t in range(1, g.n + g.m + 1):
            c = exists_coloring(g, t)
            if c is None:
                continue
            span = max(c.colors()) - min(c.colors())
            assert span >= G.max_degree(g)


def test_differential_against_naive_oracle():
    rng = random.Random(2024)
    agree_valid = 0
    for _ in range(1000):
        g = random_graph(rng, max_n=8)
        c = random_coloring(rng, g)
        main = verify_interval_total(g, c).valid
        assert main == brute_force_verifier_oracle(g, c)
        agree_valid += main
    # random colorings are almost never valid; also compare on near-valid ones
    for _ in range(300):
        g = random_graph(rng, max_n=5, p=0.5)
        t = rng.randint(1, g.n + g.m)
        c = exists_coloring(g, t)
        if c is None:
            continue
        assert brute_force_verifier_oracle(g, c)
        d = perturb(rng, c)
        assert verify_interval_total(g, d).valid == brute_force_verifier_oracle(g, d)


@settings(max_examples=200)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_differential_property(g, rnd):
    c = random_coloring(rnd, g)
    assert verify_interval_total(g, c).valid == brute_force_verifier_oracle(g, c)


def test_certificate_json_round_trip():
    g = G.wheel(6)
    c = TotalColoring((6, 2, 5, 4, 2, 4), (1, 3, 5, 4, 2, 4, 6, 3, 5, 3), 6)
    data = certificate_to_json(g, c, construction="x")
    text = json.dumps(data)
    g2, c2 = certificate_from_json(text)
    assert g2 == g and c2 == c
    assert set(data) == {"graph", "t", "vertex_colors", "edge_colors", "construction"}


def test_certificate_from_json_rejects_malformed():
    with pytest.raises(CertificateError):
        certificate_from_json({"graph": {"n": 2, "edges": [[0, 1]]}, "t": 3})
    with pytest.raises(CertificateError):
        certificate_from_json({"graph": {"n": 2, "edges": [[0, 1]]}, "t": 3, "vertex_colors": [1], "edge_colors": [2]})


def test_failure_json_and_str(k2):
    out = verify_interval_total(k2, TotalColoring((1, 2), (1,), 2))
    js = out.to_json()
    assert js["valid"] is False
    assert {f["clause"] for f in js["failures"]} == out.clauses()
    assert all(str(f) for f in out.failures)
