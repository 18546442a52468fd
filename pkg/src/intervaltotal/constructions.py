"""Explicit interval total colorings for cycles, complete graphs, complete
bipartite graphs, regular bipartite graphs, trees and wheels.

Every builder returns a :class:`TotalColoring` whose edge colors follow the
edge order of the matching generator in :mod:`intervaltotal.graph`. The
closed-form builders work in the 1-based vertex names v_1, v_2, ... used by
the formulas and translate to 0-based indices only when the certificate is
assembled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .coloring import TotalColoring
from .graph import (
    FamilySpec,
    Graph,
    ParameterError,
    bipartition,
    complete,
    cycle,
    generate,
    is_tree,
    max_degree,
    structure_flags,
    wheel,
)

__all__ = [
    "ConstructionError",
    "Construction",
    "color_cycle_min",
    "color_cycle_max",
    "color_complete_max",
    "color_complete_even_min",
    "color_complete_spectrum",
    "complete_spectrum_range",
    "perfect_matching",
    "proper_edge_color_regular_bipartite",
    "color_regular_bipartite",
    "color_tree",
    "color_complete_bipartite",
    "color_wheel",
    "wheel_spectrum",
    "wheel_min",
    "wheel_plus_one",
    "wheel_plus_two",
    "wheel_plus_three",
    "wheel_plus_four",
    "claimed_t_values",
    "construct",
    "manifest_to_json",
]


class ConstructionError(ValueError):
    """The input graph is outside the class a construction handles."""


class _Painter:
    """Collects colors keyed by vertex index and by endpoint pair."""

    def __init__(self, g: Graph, vertex_index=lambda i: i - 1):
        self.g = g
        self.vi = vertex_index
        self.vertex: dict[int, int] = {}
        self.edge: dict[int, int] = {}

    def v(self, i: int, color: int) -> None:
        self.vertex[self.vi(i)] = color

    def e(self, i: int, j: int, color: int) -> None:
        self.edge[self.g.edge_index[(self.vi(i), self.vi(j))]] = color

    def done(self, t: int) -> TotalColoring:
        g = self.g
        missing_v = [x for x in range(g.n) if x not in self.vertex]
        missing_e = [k for k in range(g.m) if k not in self.edge]
        if missing_v or missing_e:
            raise AssertionError(f"formulas left vertices {missing_v} and edges {missing_e} uncolored")
        return TotalColoring(
            tuple(self.vertex[x] for x in range(g.n)),
            tuple(self.edge[k] for k in range(g.m)),
            t,
        )


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


# ---------------------------------------------------------------------------
# cycles


def color_cycle_min(n: int) -> TotalColoring:
    """Smallest interval total coloring of C_n: 3 colors if 3 | n, else 4."""
    g = cycle(n)
    p = _Painter(g)
    if n % 3 == 0:
        for i in range(1, n + 1):
            p.v(i, {0: 2, 1: 1, 2: 3}[i % 3])
        for j in range(1, n):
            p.e(j, j + 1, {0: 3, 1: 2, 2: 1}[j % 3])
        p.e(1, n, 3)
        return p.done(3)
    if n % 2 == 0:
        for i in range(1, n + 1):
            p.v(i, 4 if i % 2 == 0 else 1)
        for j in range(1, n):
            p.e(j, j + 1, 2 if j % 2 == 0 else 3)
        p.e(1, n, 2)
        return p.done(4)
    for i in range(1, n + 1):
        if i == n - 1:
            p.v(i, 2)
        elif i == n:
            p.v(i, 3)
        else:
            p.v(i, 4 if i % 2 == 0 else 1)
    for j in range(1, n):
        if j == n - 1:
            p.e(j, j + 1, 4)
        else:
            p.e(j, j + 1, 2 if j % 2 == 0 else 3)
    p.e(1, n, 2)
    return p.done(4)


def color_cycle_max(n: int) -> TotalColoring:
    """Interval total (n+2)-coloring of C_n, the largest possible."""
    g = cycle(n)
    p = _Painter(g)
    if n % 2 == 0:
        half = n // 2
        for i in range(1, half + 1):
            p.v(i, 2 * i - 1)
            p.e(i, i + 1, 2 * i)
        for j in range(half + 1, n + 1):
            p.v(j, 2 * (n - j) + 4)
        for k in range(half + 1, n):
            p.e(k, k + 1, 2 * (n - k) + 3)
    else:
        c = _ceil_half(n)
        for i in range(1, c + 2):
            p.v(i, 2 * i - 1)
        for j in range(c + 2, n + 1):
            p.v(j, 2 * (n - j) + 4)
        for k in range(1, c + 1):
            p.e(k, k + 1, 2 * k)
        for l in range(c + 1, n):
            p.e(l, l + 1, 2 * (n - l) + 3)
    p.e(1, n, 3)
    return p.done(n + 2)


# ---------------------------------------------------------------------------
# complete graphs


def color_complete_max(n: int) -> TotalColoring:
    """K_n with vertex v_i colored 2i-1 and edge v_iv_j colored i+j-1."""
    g = complete(n)
    p = _Painter(g)
    for i in range(1, n + 1):
        p.v(i, 2 * i - 1)
        for j in range(i + 1, n + 1):
            p.e(i, j, i + j - 1)
    return p.done(2 * n - 1)


def _complete_even_min_table(n: int) -> tuple[dict[int, int], dict[tuple[int, int], int]]:
    half = n // 2
    vert = {i: i for i in range(1, half + 1)}
    vert.update({j: half + j for j in range(half + 1, n + 1)})
    edge = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = i + j
            if s % 2:
                edge[(i, j)] = half + (s - 1) // 2 if s - 1 <= n else (s - 1) // 2
            else:
                edge[(i, j)] = s // 2 if s <= n else half + s // 2
    return vert, edge


def color_complete_even_min(n: int) -> TotalColoring:
    """Interval total (3n/2)-coloring of K_n for even ``n``."""
    if n < 2 or n % 2:
        raise ParameterError(f"color_complete_even_min requires even n >= 2, got n={n}")
    g = complete(n)
    p = _Painter(g)
    vert, edge = _complete_even_min_table(n)
    for i, c in vert.items():
        p.v(i, c)
    for (i, j), c in edge.items():
        p.e(i, j, c)
    return p.done(3 * n // 2)


def complete_spectrum_range(order: int) -> tuple[int, int]:
    """Range of ``t`` covered by :func:`color_complete_spectrum` for K_order."""
    if order < 1:
        raise ParameterError(f"complete graph order must be >= 1, got {order}")
    if order % 2:
        k = (order + 1) // 2
        return 2 * k - 1, 4 * k - 3
    k = order // 2
    return 3 * k, 4 * k - 1


def color_complete_spectrum(order: int, t: int) -> TotalColoring:
    """Interval total t-coloring of K_order for any t in its spectrum.

    Odd order 2k-1: colors of the (4k-3)-coloring above ``t`` drop by 2k-1.
    Even order 2k: the 3k-coloring is shifted piecewise by ``t - 3k``.
    """
    lo, hi = complete_spectrum_range(order)
    if not lo <= t <= hi:
        raise ParameterError(f"t={t} outside [{lo}, {hi}] for K_{order}")
    if order % 2:
        base = color_complete_max(order)
        fold = lambda x: x if x <= t else x - order  # noqa: E731
        return TotalColoring(
            tuple(map(fold, base.vertex_colors)),
            tuple(map(fold, base.edge_colors)),
            t,
        )

    k = order // 2
    d = t - 3 * k
    vert, edge = _complete_even_min_table(order)
    g = complete(order)
    p = _Painter(g)
    for i in range(1, order + 1):
        shifted = vert[i] + d
        p.v(i, shifted if shifted <= 2 * i - 1 else 2 * i - 1)
    low_cut = 2 * d + 1
    high_cut = 2 * k + 2 * d + 1
    for (i, j), b in edge.items():
        s = i + j - 1
        if s <= low_cut and j <= 2 * k - 1:
            c = s
        elif low_cut < s < 2 * k:
            c = b + d if (i + j) % 2 == 0 else b
        elif 2 * k <= s <= high_cut:
            c = s
        elif s > high_cut and i >= 3:
            c = b + d if (i + j) % 2 == 0 else b
        else:
            continue  # left uncolored; _Painter.done reports it
        p.e(i, j, c)
    return p.done(t)


# ---------------------------------------------------------------------------
# regular bipartite graphs


def perfect_matching(
    left: list[int], adj: dict[int, list[int]]
) -> Optional[dict[int, int]]:
    """Augmenting-path (Kuhn) matching saturating ``left``, or None.

    Left vertices are tried in the given order and neighbors in list order,
    so the result is deterministic.
    """
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: w for w, u in match_right.items()}


def proper_edge_color_regular_bipartite(g: Graph) -> tuple[int, ...]:
    """Proper edge coloring of an r-regular bipartite graph with colors 1..r.

    Color classes are perfect matchings peeled off one at a time.
    """
    flags = structure_flags(g)
    if g.m and flags.regular_degree is None:
        raise ConstructionError("graph is not regular")
    side = bipartition(g)
    if side is None:
        raise ConstructionError("graph is not bipartite")
    r = flags.regular_degree or 0
    left = [v for v in range(g.n) if side[v] == 0]
    remaining = {v: [w for w, _ in g.adjacency[v]] for v in left}
    colors = [0] * g.m
    for color in range(1, r + 1):
        matching = perfect_matching(left, remaining)
        if matching is None:
            raise AssertionError("regular bipartite graph without a perfect matching")
        for u, w in matching.items():
            colors[g.edge_index[(u, w)]] = color
            remaining[u].remove(w)
    return tuple(colors)


def color_regular_bipartite(g: Graph) -> TotalColoring:
    """Interval total (r+2)-coloring: one side gets 1, the other r+2,
    edges get a proper edge coloring shifted onto 2..r+1."""
    edge_colors = proper_edge_color_regular_bipartite(g)
    side = bipartition(g)
    r = max_degree(g)
    return TotalColoring(
        tuple(1 if s == 0 else r + 2 for s in side),
        tuple(c + 1 for c in edge_colors),
        r + 2,
    )


# ---------------------------------------------------------------------------
# trees


def color_tree(g: Graph) -> TotalColoring:
    """Interval total (Delta+2)-coloring of a tree by adding one leaf at a time.

    Vertices are attached in BFS order from vertex 0, so every step extends
    a coloring of the current subtree to one more leaf. A step that needs
    every earlier color raised by one bumps a global offset instead;
    colors are stored relative to that offset.
    """
    if not is_tree(g):
        raise ConstructionError("graph is not a tree")
    n = g.n
    if n == 1:
        return TotalColoring((1,), (), 1)

    order = [0]
    parent = [-1] * n
    parent_edge = [-1] * n
    seen = [False] * n
    seen[0] = True
    for v in order:
        for w, k in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                parent_edge[w] = k
                order.append(w)

    offset = 0
    vcol = [0] * n
    ecol = [0] * g.m
    deg = [0] * n  # degrees in the current subtree
    low = [0] * n  # smallest stored color in each current palette

    def put_vertex(v: int, c: int) -> None:
        vcol[v] = c - offset
        low[v] = c - offset

    def put_edge(u: int, v: int, k: int, c: int) -> None:
        ecol[k] = c - offset
        deg[u] += 1
        deg[v] += 1
        low[u] = min(low[u], ecol[k])
        low[v] = min(low[v], ecol[k])

    # base: a single edge colored 1, 2, 3
    root, first = order[0], order[1]
    put_vertex(root, 1)
    put_vertex(first, 3)
    put_edge(root, first, parent_edge[first], 2)
    big_delta = 1

    for u in order[2:]:
        v, k = parent[u], parent_edge[u]
        d_new = deg[v] + 1  # degree of v once u is attached
        prev_delta = big_delta
        big_delta = max(big_delta, d_new)
        s1 = low[v] + offset
        if s1 == 1:
            edge_c, leaf_c = d_new + 1, d_new + 2
        elif s1 == 2:
            if vcol[v] + offset == 2:
                edge_c, leaf_c = d_new + 2, d_new + 1
            elif prev_delta == big_delta:
                edge_c, leaf_c = 1, 2
            else:
                offset += 1
                edge_c, leaf_c = 2, 1
        else:
            edge_c, leaf_c = s1 - 1, s1 - 2
        put_vertex(u, leaf_c)
        put_edge(u, v, k, edge_c)

    return TotalColoring(
        tuple(c + offset for c in vcol),
        tuple(c + offset for c in ecol),
        big_delta + 2,
    )


# ---------------------------------------------------------------------------
# complete bipartite graphs


def color_complete_bipartite(m: int, n: int) -> TotalColoring:
    """K_{m,n}: u_i gets i, v_j gets m+1+j, edge u_iv_j gets i+j."""
    if m < 1 or n < 1:
        raise ParameterError(f"complete bipartite graph needs m, n >= 1, got m={m}, n={n}")
    vertex = [i for i in range(1, m + 1)] + [m + 1 + j for j in range(1, n + 1)]
    edges = [i + j for i in range(1, m + 1) for j in range(1, n + 1)]
    return TotalColoring(tuple(vertex), tuple(edges), m + n + 1)


# ---------------------------------------------------------------------------
# wheels: hub u is index 0, rim vertex v_i is index i


def _wheel_painter(n: int) -> _Painter:
    return _Painter(wheel(n), vertex_index=lambda i: i)


_U = 0


def wheel_min(n: int) -> TotalColoring:
    """Interval total n-coloring of W_n for n >= 5."""
    if n < 5:
        raise ParameterError(f"wheel_min requires n >= 5, got n={n}")
    p = _wheel_painter(n)
    p.v(_U, n)
    p.v(1, 2)
    if n % 2 == 0:
        h = n // 2
        for i in range(2, h):
            p.v(i, 2 * i + 1)
        p.v(h, n - 2)
        p.v(h + 1, n - 4)
        for j in range(h + 2, n):
            p.v(j, 2 * (n - j + 1))
        for k in range(1, h + 1):
            p.e(_U, k, 2 * k - 1)
        for l in range(h + 1, n):
            p.e(_U, l, 2 * (n - l))
        for q in range(1, h):
            p.e(q, q + 1, 2 * (q + 1))
        p.e(h, h + 1, n - 3)
        for q in range(h + 1, n - 1):
            p.e(q, q + 1, 2 * (n - q) + 1)
    else:
        f, c = n // 2, _ceil_half(n)
        for i in range(2, f):
            p.v(i, 2 * i + 1)
        p.v(f, n - 4)
        p.v(c, n - 2)
        for j in range(c + 1, n):
            p.v(j, 2 * (n - j + 1))
        for k in range(1, f + 1):
            p.e(_U, k, 2 * k - 1)
        for l in range(c, n):
            p.e(_U, l, 2 * (n - l))
        for q in range(1, f):
            p.e(q, q + 1, 2 * (q + 1))
        p.e(f, c, n - 3)
        for q in range(c, n - 1):
            p.e(q, q + 1, 2 * (n - q) + 1)
    p.e(1, n - 1, 3)
    return p.done(n)


def wheel_plus_two(n: int) -> TotalColoring:
    """Interval total (n+2)-coloring of W_n for n >= 5."""
    if n < 5:
        raise ParameterError(f"wheel_plus_two requires n >= 5, got n={n}")
    p = _wheel_painter(n)
    c, f, g = _ceil_half(n), n // 2, (n - 1) // 2
    p.v(_U, 1)
    p.v(1, 3)
    p.v(c, n - 1)
    for i in range(2, c):
        p.v(i, 2 * (i + 1))
    for j in range(c + 1, n):
        p.v(j, 2 * (n - j) + 3)
    for k in range(1, f + 1):
        p.e(_U, k, 2 * k)
    for l in range(f + 1, n):
        p.e(_U, l, 2 * (n - l) + 1)
    for q in range(1, g + 1):
        p.e(q, q + 1, 2 * q + 3)
    for q in range(g + 1, n - 1):
        p.e(q, q + 1, 2 * (n - q + 1))
    p.e(1, n - 1, 4)
    return p.done(n + 2)


def wheel_plus_one(n: int) -> TotalColoring:
    """Interval total (n+1)-coloring of W_n: the (n+2)-coloring with edges
    colored n+2 recolored to n-2."""
    base = wheel_plus_two(n)
    return TotalColoring(
        base.vertex_colors,
        tuple(n - 2 if x == n + 2 else x for x in base.edge_colors),
        n + 1,
    )


def wheel_plus_three(n: int) -> TotalColoring:
    """Interval total (n+3)-coloring of W_n for n >= 4."""
    if n < 4:
        raise ParameterError(f"wheel_plus_three requires n >= 4, got n={n}")
    p = _wheel_painter(n)
    if n % 2 == 0:
        h = n // 2
        for i in range(1, h + 2):
            p.v(i, 2 * i - 1)
        for j in range(h + 2, n):
            p.v(j, 2 * (n - j + 1))
        for k in range(1, h + 1):
            p.e(k, k + 1, 2 * k)
        for l in range(h + 1, n - 1):
            p.e(l, l + 1, 2 * (n - l) + 1)
        for q in range(2, h + 1):
            p.e(_U, q, 2 * q + 1)
        for q in range(h + 1, n):
            p.e(_U, q, 2 * (n - q + 2))
    else:
        f, c = n // 2, _ceil_half(n)
        for i in range(1, f + 1):
            p.v(i, 2 * i - 1)
            p.e(i, i + 1, 2 * i)
        for j in range(c, n):
            p.v(j, 2 * (n - j + 1))
        for k in range(c, n - 1):
            p.e(k, k + 1, 2 * (n - k) + 1)
        for q in range(2, c + 1):
            p.e(_U, q, 2 * q + 1)
        for q in range(c + 1, n):
            p.e(_U, q, 2 * (n - q + 2))
    p.e(1, n - 1, 3)
    p.e(_U, 1, 4)
    p.v(_U, n + 3)
    return p.done(n + 3)


def wheel_plus_four(n: int) -> TotalColoring:
    """Interval total (n+4)-coloring of W_n for n >= 9."""
    if n < 9:
        raise ParameterError(f"wheel_plus_four requires n >= 9, got n={n}")
    p = _wheel_painter(n)
    p.v(_U, 7)
    p.v(1, 1)
    p.v(2, 6)
    p.v(3, 8)
    p.v(n - 1, 3)
    p.e(_U, 1, 3)
    p.e(_U, 2, 5)
    p.e(1, 2, 4)
    p.e(2, 3, 7)
    p.e(1, n - 1, 2)
    if n % 2 == 0:
        h = n // 2
        for i in range(4, h - 1):
            p.v(i, 2 * i + 1)
        p.v(h - 1, n + 2)
        p.v(h, n + 4)
        for j in range(h + 1, n - 1):
            p.v(j, 2 * (n - j))
        for k in range(3, h):
            p.e(_U, k, 2 * k + 3)
        for l in range(h, n):
            p.e(_U, l, 2 * (n - l + 1))
        for q in range(3, h - 1):
            p.e(q, q + 1, 2 * (q + 2))
        for q in range(h - 1, n - 1):
            p.e(q, q + 1, 2 * (n - q) + 1)
    else:
        f, c = n // 2, _ceil_half(n)
        for i in range(4, f):
            p.v(i, 2 * i + 1)
        p.v(f, n + 4)
        p.v(c, n + 2)
        for j in range(c + 1, n - 1):
            p.v(j, 2 * (n - j))
        for k in range(3, f + 1):
            p.e(_U, k, 2 * k + 3)
        for l in range(c, n):
            p.e(_U, l, 2 * (n - l + 1))
        for q in range(3, f + 1):
            p.e(q, q + 1, 2 * (q + 2))
        for q in range(c, n - 1):
            p.e(q, q + 1, 2 * (n - q) + 1)
    return p.done(n + 4)


def wheel_spectrum(n: int) -> tuple[int, int]:
    """Least and greatest t with an interval total t-coloring of W_n."""
    if n < 4:
        raise ParameterError(f"wheel requires n >= 4, got n={n}")
    if n == 4:
        return 6, 7
    return n, n + 3 if n <= 8 else n + 4


def _relabel_complete_onto_wheel(c: TotalColoring) -> TotalColoring:
    # W_4 and K_4 share vertex indices but list their edges in different orders
    k4, w4 = complete(4), wheel(4)
    return TotalColoring(
        c.vertex_colors,
        tuple(c.edge_colors[k4.edge_index[e]] for e in w4.edges),
        c.t,
    )


def color_wheel(n: int, t: int) -> TotalColoring:
    """Interval total t-coloring of the wheel on ``n`` vertices (hub included)."""
    lo, hi = wheel_spectrum(n)
    if not lo <= t <= hi:
        raise ParameterError(f"t={t} outside [{lo}, {hi}] for the wheel with n={n}")
    if n == 4:
        base = color_complete_even_min(4) if t == 6 else color_complete_max(4)
        return _relabel_complete_onto_wheel(base)
    builder = {
        n: wheel_min,
        n + 1: wheel_plus_one,
        n + 2: wheel_plus_two,
        n + 3: wheel_plus_three,
        n + 4: wheel_plus_four,
    }[t]
    return builder(n)


# ---------------------------------------------------------------------------
# dispatch and manifest


@dataclass(frozen=True)
class Construction:
    spec: FamilySpec
    graph: Graph
    coloring: TotalColoring
    method: str

    def manifest_entry(self) -> dict:
        return {
            "family": self.spec.family,
            "parameters": self.spec.params(),
            "construction": self.method,
            "t": self.coloring.t,
        }


def claimed_t_values(spec: FamilySpec) -> list[int]:
    """Every ``t`` for which :func:`construct` has a construction."""
    g = generate(spec)
    fam = spec.family
    if fam == "cycle":
        return [3 if spec.n % 3 == 0 else 4, spec.n + 2]
    if fam == "complete":
        lo, hi = complete_spectrum_range(spec.n)
        return list(range(lo, hi + 1))
    if fam == "complete_bipartite":
        return [spec.m + spec.n + 1]
    if fam == "wheel":
        lo, hi = wheel_spectrum(spec.n)
        return list(range(lo, hi + 1))
    if fam in ("path", "tree_random"):
        return [color_tree(g).t]
    if fam == "regular_bipartite_named":
        return [max_degree(g) + 2]
    raise ParameterError(f"no construction for family {fam!r}")


def construct(spec: FamilySpec, t: Optional[int] = None) -> Construction:
    """Build the graph for ``spec`` and a certificate with ``t`` colors.

    ``t=None`` picks the smallest ``t`` the constructions cover. A ``t``
    with no construction raises :class:`ParameterError`.
    """
    g = generate(spec)
    claimed = claimed_t_values(spec)
    if t is None:
        t = min(claimed)
    if t not in claimed:
        raise ParameterError(
            f"no construction gives t={t} for {spec.family} {spec.params()}; "
            f"covered values are {claimed} (use the search oracle for others)"
        )
    fam = spec.family
    if fam == "cycle":
        if t == spec.n + 2:
            c, method = color_cycle_max(spec.n), "cycle-max"
        else:
            c, method = color_cycle_min(spec.n), "cycle-min"
    elif fam == "complete":
        n = spec.n
        if t == 2 * n - 1:
            c, method = color_complete_max(n), "complete-max"
        elif n % 2 == 0 and t == 3 * n // 2:
            c, method = color_complete_even_min(n), "complete-even-min"
        else:
            c, method = color_complete_spectrum(n, t), "complete-spectrum"
    elif fam == "complete_bipartite":
        c, method = color_complete_bipartite(spec.m, spec.n), "complete-bipartite"
    elif fam == "wheel":
        c = color_wheel(spec.n, t)
        method = "wheel-" + ("complete-graph" if spec.n == 4 else f"t-minus-n={t - spec.n}")
    elif fam in ("path", "tree_random"):
        c, method = color_tree(g), "tree-leaf-extension"
    else:
        c, method = color_regular_bipartite(g), "regular-bipartite"
    return Construction(spec, g, c, method)


def manifest_to_json(constructions: list[Construction]) -> str:
    return json.dumps([c.manifest_entry() for c in constructions], indent=2)
