"""Exhaustive backtracking search for interval total colorings.

Decides whether a small graph has an interval total t-coloring and sweeps a
range of t to find the least and greatest feasible values.

Elements (vertices and edges) are colored in a breadth-first order in which
each vertex is followed by its not-yet-ordered incident edges. Element ids
are ``0..n-1`` for vertices and ``n + k`` for edge ``k``.

Pruning rules, each of which can be switched off in :class:`SearchConfig`:

* palette window: a vertex whose star (itself plus incident edges) already
  holds colors ``S`` can only take further colors inside some window
  ``[a, a + d]`` with ``min(S) >= a``, ``max(S) <= a + d`` and
  ``1 <= a <= t - d``;
* surjectivity: the colors not yet used must fit on the elements not yet
  colored;
* reachability: every unused color must still lie in the window of some
  uncolored element.

With a rule switched off the corresponding condition is checked only on
complete assignments, so verdicts never depend on which rules are on.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import bound_report
from .coloring import TotalColoring, certificate_to_json, verify_interval_total
from .graph import Graph, graph_to_json, max_degree

__all__ = [
    "BudgetExhausted",
    "SearchConfig",
    "Verdict",
    "SpectrumResult",
    "element_order",
    "exists_coloring",
    "compute_spectrum",
    "brute_force_verifier_oracle",
    "exhaustive_exists",
]

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
BUDGET = "budget"


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the search finished."""

    def __init__(self, t: int, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes at t={t}")
        self.t = t
        self.nodes = nodes


@dataclass(frozen=True)
class SearchConfig:
    t_min: Optional[int] = None
    t_max: Optional[int] = None
    node_budget: Optional[int] = None
    # split the search on the first element's color; each branch gets the full node budget
    split: bool = False
    jobs: int = 1
    symmetry_breaking: bool = False
    prune_palette: bool = True
    prune_surjectivity: bool = True
    prune_reachability: bool = True

    def __post_init__(self) -> None:
        if self.t_min is not None and self.t_min < 1:
            raise ValueError("t_min must be >= 1")
        if self.t_min is not None and self.t_max is not None and self.t_max < self.t_min:
            raise ValueError("t_max must be >= t_min")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def element_order(g: Graph) -> list[int]:
    order = []
    seen_v = [False] * g.n
    seen_e = [False] * g.m
    for root in range(g.n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = [root]
        for v in queue:
            order.append(v)
            for w, k in g.adjacency[v]:
                if not seen_e[k]:
                    seen_e[k] = True
                    order.append(g.n + k)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return order


class _Problem:
    def __init__(self, g: Graph, cfg: SearchConfig):
        self.g = g
        self.cfg = cfg
        n = g.n
        self.size = n + g.m
        self.order = element_order(g)
        # stars are indexed by their vertex
        self.star_deg = list(g.degrees)
        self.stars_of = [[v] for v in range(n)] + [[a, b] for a, b in g.edges]
        conflicts: list[set[int]] = [set() for _ in range(self.size)]
        for k, (a, b) in enumerate(g.edges):
            conflicts[a].add(b)
            conflicts[b].add(a)
        for v in range(n):
            star = [v] + [n + k for _, k in g.adjacency[v]]
            for x in star:
                conflicts[x].update(y for y in star if y != x)
        self.conflicts = [sorted(c) for c in conflicts]

    def solve(self, t: int, first_colors: Optional[list[int]] = None, budget: Optional[int] = None):
        """Return ``(colors, nodes)``; ``colors`` is None when infeasible."""
        g, cfg = self.g, self.cfg
        n, size = g.n, self.size
        if size == 0:
            return None, 0
        if t < max_degree(g) + 1 or t > size:
            return None, 0

        order = self.order
        conflicts = self.conflicts
        stars_of = self.stars_of
        d = self.star_deg
        col = [0] * size
        mn = [t + 1] * n
        mx = [0] * n
        cnt = [0] * (t + 2)
        unused = [t]
        nodes = [0]
        palette_rule = cfg.prune_palette
        surj_rule = cfg.prune_surjectivity
        reach_rule = cfg.prune_reachability and palette_rule

        def window(x: int) -> tuple[int, int]:
            lo, hi = 1, t
            for s in stars_of[x]:
                ds = d[s]
                if mx[s]:
                    if mx[s] - ds > lo:
                        lo = mx[s] - ds
                    top = min(mn[s], t - ds) + ds
                    if top < hi:
                        hi = top
                elif t - ds < 1:
                    return 1, 0
            return lo, hi

        def leaf_ok() -> bool:
            if not palette_rule:
                for s in range(n):
                    if mx[s] - mn[s] > d[s]:
                        return False
            if not surj_rule and unused[0]:
                return False
            return True

        def reachable(p: int) -> bool:
            # every unused color must fit in some uncolored element's window
            if unused[0] == 0:
                return True
            need = {c for c in range(1, t + 1) if not cnt[c]}
            for q in range(p, size):
                lo, hi = window(order[q])
                need = {c for c in need if not lo <= c <= hi}
                if not need:
                    return True
            return False

        def rec(p: int) -> bool:
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExhausted(t, nodes[0])
            if p == size:
                return leaf_ok()
            x = order[p]
            if palette_rule:
                lo, hi = window(x)
            else:
                lo, hi = 1, t
            if p == 0:
                if first_colors is not None:
                    candidates = [c for c in first_colors if lo <= c <= hi]
                elif cfg.symmetry_breaking:
                    candidates = range(lo, min(hi, (t + 1) // 2) + 1)
                else:
                    candidates = range(lo, hi + 1)
            else:
                candidates = range(lo, hi + 1)
            forbidden = {col[y] for y in conflicts[x]}
            remaining = size - p - 1
            my_stars = stars_of[x]
            for c in candidates:
                if c in forbidden:
                    continue
                fresh = cnt[c] == 0
                if surj_rule and unused[0] - fresh > remaining:
                    continue
                col[x] = c
                cnt[c] += 1
                unused[0] -= fresh
                saved = [(s, mn[s], mx[s]) for s in my_stars]
                for s in my_stars:
                    if c < mn[s]:
                        mn[s] = c
                    if c > mx[s]:
                        mx[s] = c
                if (not reach_rule or reachable(p + 1)) and rec(p + 1):
                    return True
                for s, a, b in saved:
                    mn[s] = a
                    mx[s] = b
                unused[0] += fresh
                cnt[c] -= 1
                col[x] = 0
            return False

        found = rec(0)
        return (list(col) if found else None), nodes[0]

    def first_candidates(self, t: int) -> list[int]:
        top = (t + 1) // 2 if self.cfg.symmetry_breaking else t
        return list(range(1, top + 1))

    def to_coloring(self, colors: list[int], t: int) -> TotalColoring:
        return TotalColoring(tuple(colors[: self.g.n]), tuple(colors[self.g.n :]), t)


def _solve_branch(args):
    g, cfg, t, c, budget = args
    try:
        colors, nodes = _Problem(g, cfg).solve(t, [c], budget)
    except BudgetExhausted as exc:
        return BUDGET, None, exc.nodes
    return (FEASIBLE if colors else INFEASIBLE), colors, nodes


def _decide(g: Graph, t: int, cfg: SearchConfig) -> tuple[str, Optional[TotalColoring], int]:
    prob = _Problem(g, cfg)
    if not cfg.split:
        try:
            colors, nodes = prob.solve(t, None, cfg.node_budget)
        except BudgetExhausted as exc:
            return BUDGET, None, exc.nodes
        return (FEASIBLE if colors else INFEASIBLE), (prob.to_coloring(colors, t) if colors else None), nodes

    tasks = [(g, cfg, t, c, cfg.node_budget) for c in prob.first_candidates(t)]
    results = []
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for res in pool.map(_solve_branch, tasks):
                results.append(res)
                if res[0] == FEASIBLE:
                    break
    else:
        for task in tasks:
            res = _solve_branch(task)
            results.append(res)
            if res[0] == FEASIBLE:
                break
    nodes = sum(r[2] for r in results)
    # the lowest first color with a witness wins, so the answer matches a sequential run
    for status, colors, _ in results:
        if status == FEASIBLE:
            return FEASIBLE, prob.to_coloring(colors, t), nodes
        if status == BUDGET:
            return BUDGET, None, nodes
    return INFEASIBLE, None, nodes


def exists_coloring(g: Graph, t: int, cfg: Optional[SearchConfig] = None) -> Optional[TotalColoring]:
    """An interval total t-coloring of ``g``, or None if none exists.

    Raises :class:`BudgetExhausted` if ``cfg.node_budget`` runs out first.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    cfg = cfg or SearchConfig()
    status, coloring, nodes = _decide(g, t, cfg)
    if status == BUDGET:
        raise BudgetExhausted(t, nodes)
    if coloring is not None and not verify_interval_total(g, coloring).valid:
        raise AssertionError("search produced an invalid witness")
    return coloring


@dataclass(frozen=True)
class Verdict:
    t: int
    status: str
    certificate: Optional[TotalColoring] = None
    nodes: int = 0


@dataclass(frozen=True)
class SpectrumResult:
    graph: Graph
    t_range: tuple[int, int]
    verdicts: tuple[Verdict, ...]
    w_tau: Optional[int]
    W_tau: Optional[int]

    def feasible(self) -> list[int]:
        return [v.t for v in self.verdicts if v.status == FEASIBLE]

    def status(self, t: int) -> str:
        for v in self.verdicts:
            if v.t == t:
                return v.status
        raise KeyError(t)

    def to_json(self) -> dict:
        verdicts = []
        for v in self.verdicts:
            entry = {"t": v.t, "status": v.status}
            if v.certificate is not None:
                entry["certificate"] = certificate_to_json(self.graph, v.certificate)
            verdicts.append(entry)
        return {
            "graph": graph_to_json(self.graph),
            "t_range": list(self.t_range),
            "verdicts": verdicts,
            "w_tau": self.w_tau,
            "W_tau": self.W_tau,
        }

    def to_table(self) -> str:
        rows = [f"{'t':>4}  {'status':<10} {'nodes':>10}"]
        for v in self.verdicts:
            rows.append(f"{v.t:>4}  {v.status:<10} {v.nodes:>10}")
        rows.append(f"w_tau={self.w_tau if self.w_tau is not None else '?'}  W_tau={self.W_tau if self.W_tau is not None else '?'}")
        return "\n".join(rows) + "\n"


def default_t_range(g: Graph) -> tuple[int, int]:
    """From Delta+1 to the smallest applicable upper bound on W_tau."""
    return max_degree(g) + 1, bound_report(g).best_upper()


def compute_spectrum(g: Graph, cfg: Optional[SearchConfig] = None) -> SpectrumResult:
    """Verdicts for every t in the configured range, plus w_tau and W_tau
    when the range covers the provable bounds and the verdicts settle them."""
    cfg = cfg or SearchConfig()
    lower, upper = default_t_range(g)
    t_min = cfg.t_min if cfg.t_min is not None else lower
    t_max = cfg.t_max if cfg.t_max is not None else upper
    if t_max < t_min:
        raise ValueError(f"empty t range [{t_min}, {t_max}]")
    verdicts = []
    for t in range(t_min, t_max + 1):
        status, coloring, nodes = _decide(g, t, cfg)
        verdicts.append(Verdict(t, status, coloring, nodes))

    w_tau = W_tau = None
    if t_min <= lower:
        for v in verdicts:
            if v.status == BUDGET:
                break
            if v.status == FEASIBLE:
                w_tau = v.t
                break
    if t_max >= upper:
        for v in reversed(verdicts):
            if v.status == BUDGET:
                break
            if v.status == FEASIBLE:
                W_tau = v.t
                break
    return SpectrumResult(g, (t_min, t_max), tuple(verdicts), w_tau, W_tau)



# ---------------------------------------------------------------------------
# independent cross-checks


def brute_force_verifier_oracle(g: Graph, c: TotalColoring) -> bool:
    """Naive re-check of the interval total coloring definition.

    Deliberately shares no code with :mod:`intervaltotal.coloring`.
    """
    n = g.n
    vc = list(c.vertex_colors)
    ec = list(c.edge_colors)
    if len(vc) != n or len(ec) != len(g.edges):
        return False
    everything = vc + ec
    for x in everything:
        if x < 1 or x > c.t:
            return False
    for i in range(1, c.t + 1):
        if i not in everything:
            return False
    for a, b in g.edges:
        if vc[a] == vc[b]:
            return False
    for v in range(n):
        incident = [k for k, e in enumerate(g.edges) if v in e]
        items = [vc[v]] + [ec[k] for k in incident]
        if len(set(items)) != len(items):
            return False
        need = set(range(min(items), min(items) + len(incident) + 1))
        if set(items) != need:
            return False
    return True


def exhaustive_exists(g: Graph, t: int, chunk: int = 1 << 18) -> bool:
    """Plain enumeration of all ``t ** (n + m)`` color assignments.

    No pruning at all; only for cross-checking the backtracking search on
    tiny graphs.
    """
    n, m = g.n, len(g.edges)
    k = n + m
    if k == 0:
        return False
    pairs = [(a, b) for a, b in g.edges]
    stars = []
    for v in range(n):
        star = [v] + [n + i for i, e in enumerate(g.edges) if v in e]
        stars.append(star)
        pairs += list(itertools.combinations(star, 2))
    pairs_a = np.array([p[0] for p in pairs], dtype=np.int64)
    pairs_b = np.array([p[1] for p in pairs], dtype=np.int64)
    powers = t ** np.arange(k, dtype=np.int64)
    total = t**k
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        a = (idx[:, None] // powers[None, :]) % t + 1
        ok = np.ones(len(idx), dtype=bool)
        if len(pairs):
            ok &= np.all(a[:, pairs_a] != a[:, pairs_b], axis=1)
        for star in stars:
            sub = a[:, star]
            ok &= (sub.max(axis=1) - sub.min(axis=1)) == len(star) - 1
        for color in range(1, t + 1):
            ok &= np.any(a == color, axis=1)
        if ok.any():
            return True
    return False

