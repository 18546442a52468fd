import itertools
import random

import pytest

from intervaltotal import graph as G
from intervaltotal.bounds import bound_report, known_exact_values
from intervaltotal.coloring import verify_interval_total
from intervaltotal.graph import FamilySpec, Graph
from intervaltotal.search import (
    BudgetExhausted,
    SearchConfig,
    brute_force_verifier_oracle,
    compute_spectrum,
    default_t_range,
    element_order,
    exhaustive_exists,
    exists_coloring,
)

from oracles import random_graph


def _all_small_graphs(max_elements: int):
    """Every labeled graph on at most 4 vertices whose vertex count plus
    edge count is at most ``max_elements``."""
    for n in range(1, 5):
        pairs = list(itertools.combinations(range(n), 2))
        for r in range(len(pairs) + 1):
            for edges in itertools.combinations(pairs, r):
                if n + r <= max_elements:
                    yield Graph(n, edges)


@pytest.mark.parametrize("t, feasible", [(5, False), (6, True), (7, True), (8, False)])
def test_k4(t, feasible):
    assert (exists_coloring(G.complete(4), t) is not None) is feasible


def test_c5_three_colors_infeasible():
    assert exists_coloring(G.cycle(5), 3) is None


def test_spectrum_examples():
    assert compute_spectrum(G.complete(3)).feasible() == [3, 4, 5]
    r = compute_spectrum(G.complete(4))
    assert r.feasible() == [6, 7]
    assert (r.w_tau, r.W_tau) == (6, 7)
    assert compute_spectrum(G.wheel(5)).feasible() == [5, 6, 7, 8]


def test_element_order_is_a_bfs_interleaving():
    g = G.wheel(5)
    order = element_order(g)
    assert sorted(order) == list(range(g.n + g.m))
    assert order[0] == 0
    # the hub's spokes follow it immediately
    assert order[1 : 1 + 4] == [g.n + k for _, k in g.adjacency[0]]


def test_element_order_covers_disconnected_graphs():
    g = Graph(5, ((0, 1), (3, 4)))
    assert sorted(element_order(g)) == list(range(7))


def test_witnesses_pass_both_verifiers():
    rng = random.Random(1)
    for _ in range(80):
        g = random_graph(rng, max_n=5, p=0.5)
        for t in range(1, g.n + g.m + 1):
            c = exists_coloring(g, t)
            if c is not None:
                assert verify_interval_total(g, c).valid
                assert brute_force_verifier_oracle(g, c)


def test_agrees_with_plain_enumeration_quick():
    for g in _all_small_graphs(6):
        for t in range(1, g.n + g.m + 1):
            assert (exists_coloring(g, t) is not None) == exhaustive_exists(g, t), (g, t)


@pytest.mark.slow
def test_agrees_with_plain_enumeration_on_tiny_graphs():
    # t ** (n + m) assignments each; kept to a few million
    checked = 0
    for g in _all_small_graphs(9):
        for t in range(1, g.n + g.m + 1):
            if t ** (g.n + g.m) > 3_000_000:
                continue
            assert (exists_coloring(g, t) is not None) == exhaustive_exists(g, t), (g, t)
            checked += 1
    extra = [(G.cycle(4), 4), (G.cycle(4), 5), (G.path(4), 5), (G.complete_bipartite(1, 3), 5)]
    for g, t in extra:
        assert (exists_coloring(g, t) is not None) == exhaustive_exists(g, t)
        checked += 1
    assert checked > 100


VARIANTS = {
    "split": SearchConfig(split=True),
    "jobs": SearchConfig(split=True, jobs=2),
    "symmetry": SearchConfig(symmetry_breaking=True),
    "split+symmetry": SearchConfig(split=True, symmetry_breaking=True),
    "no-palette-prune": SearchConfig(prune_palette=False),
    "no-surjectivity-prune": SearchConfig(prune_surjectivity=False),
    "no-reachability-prune": SearchConfig(prune_reachability=False),
}

SMALL_SUITE = [G.path(3), G.cycle(3), G.cycle(4), G.cycle(5), G.complete(4), G.complete_bipartite(1, 3),
               G.complete_bipartite(2, 2), Graph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))]


@pytest.mark.parametrize("variant", list(VARIANTS), ids=str)
def test_verdicts_do_not_depend_on_config(variant):
    cfg = VARIANTS[variant]
    suite = SMALL_SUITE[:3] if cfg.jobs > 1 else SMALL_SUITE
    for g in suite:
        base = compute_spectrum(g)
        other = compute_spectrum(g, cfg)
        assert [v.status for v in other.verdicts] == [v.status for v in base.verdicts], g
        assert (other.w_tau, other.W_tau) == (base.w_tau, base.W_tau)
        for v in other.verdicts:
            if v.certificate is not None:
                assert verify_interval_total(g, v.certificate).valid


def test_split_witness_matches_sequential_choice():
    g = G.complete(4)
    a = exists_coloring(g, 6, SearchConfig(split=True))
    b = exists_coloring(g, 6, SearchConfig(split=True, jobs=2))
    assert a == b


def test_budget_is_distinct_from_infeasible():
    g = G.cycle(6)
    with pytest.raises(BudgetExhausted) as info:
        exists_coloring(g, 9, SearchConfig(node_budget=10))
    assert info.value.t == 9
    assert exists_coloring(g, 9) is None


def test_budget_leaves_spectrum_ends_unresolved():
    r = compute_spectrum(G.complete(4), SearchConfig(node_budget=5))
    assert "budget" in {v.status for v in r.verdicts}
    assert r.w_tau is None


def test_partial_range_does_not_claim_extremes():
    r = compute_spectrum(G.complete(4), SearchConfig(t_min=6, t_max=6))
    assert r.feasible() == [6]
    assert r.w_tau is None and r.W_tau is None


def test_default_range():
    g = G.cycle(6)
    assert default_t_range(g) == (3, bound_report(g).best_upper()) == (3, 9)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(t_min=0)
    with pytest.raises(ValueError):
        SearchConfig(t_min=5, t_max=4)
    with pytest.raises(ValueError):
        exists_coloring(G.path(2), 0)


def test_spectrum_json_shape():
    data = compute_spectrum(G.complete(3)).to_json()
    assert set(data) == {"graph", "t_range", "verdicts", "w_tau", "W_tau"}
    assert data["t_range"] == [3, 5]
    assert all(v["status"] == "feasible" and "certificate" in v for v in data["verdicts"])


def _oracle_values(spec):
    r = compute_spectrum(G.generate(spec))
    assert "budget" not in {v.status for v in r.verdicts}
    return r


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_values(n):
    spec = FamilySpec("cycle", n=n)
    r = _oracle_values(spec)
    known = known_exact_values(spec)
    assert (r.w_tau, r.W_tau) == (known.w_tau, known.W_tau)


@pytest.mark.parametrize("n", range(2, 6))
def test_complete_values(n):
    spec = FamilySpec("complete", n=n)
    r = _oracle_values(spec)
    known = known_exact_values(spec)
    assert (r.w_tau, r.W_tau) == (known.w_tau, known.W_tau)
    lo, hi = known.spectrum_ranges[0]
    assert r.feasible() == list(range(lo, hi + 1))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_wheel_values(n):
    spec = FamilySpec("wheel", n=n)
    r = _oracle_values(spec)
    known = known_exact_values(spec)
    assert (r.w_tau, r.W_tau) == (known.w_tau, known.W_tau)
    lo, hi = known.spectrum_ranges[0]
    assert r.feasible() == list(range(lo, hi + 1))


@pytest.mark.parametrize("n", range(2, 6))
def test_path_values(n):
    spec = FamilySpec("path", n=n)
    r = _oracle_values(spec)
    assert r.W_tau == known_exact_values(spec).W_tau == 2 * n - 1
