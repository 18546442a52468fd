"""Simple undirected graphs, family generators and the structural queries
needed by the colorings and bounds.

Vertices are 0-indexed. Edge ``k`` is the ``k``-th pair of ``Graph.edges``
and keeps that index for the lifetime of the graph.
"""

from __future__ import annotations

import heapq
import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "ParameterError",
    "DisconnectedGraphError",
    "FamilySpec",
    "StructureFlags",
    "FAMILIES",
    "REGULAR_BIPARTITE_NAMES",
    "generate",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "wheel",
    "random_tree",
    "hypercube",
    "degree",
    "max_degree",
    "diameter",
    "distances_from",
    "structure_flags",
    "bipartition",
    "is_tree",
    "max_shortest_path_degree_sum",
    "graph_to_json",
    "graph_from_json",
    "to_dot",
]


class GraphError(ValueError):
    """Malformed graph or an index outside the graph."""


class ParameterError(ValueError):
    """A family or construction parameter is outside its allowed range."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        seen = set()
        for k, (a, b) in enumerate(edges):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge {k} = {(a, b)} has an endpoint outside 0..{self.n - 1}")
            if a == b:
                raise GraphError(f"edge {k} is a loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphError(f"edge {k} duplicates {key}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise GraphError("one label per vertex required")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge_index)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for k, (a, b) in enumerate(self.edges):
            adj[a].append((b, k))
            adj[b].append((a, k))
        return tuple(tuple(row) for row in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Lookup of an edge index by either endpoint order."""
        index = {}
        for k, (a, b) in enumerate(self.edges):
            index[(a, b)] = k
            index[(b, a)] = k
        return index

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [w for w, _ in self.adjacency[v]]

    def incident_edges(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [k for _, k in self.adjacency[v]]

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return f"v{v + 1}"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex index {v} out of range 0..{self.n - 1}")


# ---------------------------------------------------------------------------
# families

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "wheel",
    "tree_random",
    "regular_bipartite_named",
)

REGULAR_BIPARTITE_NAMES = ("complete_bipartite_rr", "cube3", "even_cycle")


@dataclass(frozen=True)
class FamilySpec:
    """Which graph family to build and its size parameters.

    ``n`` is the main size parameter. For ``wheel`` it counts all vertices,
    hub included, so ``wheel`` with ``n=6`` has a 5-cycle rim. For
    ``complete_bipartite`` the parts have sizes ``m`` and ``n``. For
    ``regular_bipartite_named`` the instance is picked by ``name``:
    ``complete_bipartite_rr`` (K_{n,n}), ``cube3`` (the 3-cube) or
    ``even_cycle`` (C_n, n even).
    """

    family: str
    n: Optional[int] = None
    m: Optional[int] = None
    seed: Optional[int] = None
    name: Optional[str] = None

    def params(self) -> dict:
        return {k: v for k, v in (("n", self.n), ("m", self.m), ("seed", self.seed), ("name", self.name)) if v is not None}


def _need(value: Optional[int], what: str, family: str) -> int:
    if value is None:
        raise ParameterError(f"{family} requires parameter {what}")
    return int(value)


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path requires n >= 1, got n={n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n on v1..vn: edge i is v_i v_{i+1}, the last edge is v_1 v_n."""
    if n < 3:
        raise ParameterError(f"cycle requires n >= 3, got n={n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(edges))


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete requires n >= 1, got n={n}")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with u_1..u_m at indices 0..m-1 and v_1..v_n after them."""
    if m < 1:
        raise ParameterError(f"complete_bipartite requires m >= 1, got m={m}")
    if n < 1:
        raise ParameterError(f"complete_bipartite requires n >= 1, got n={n}")
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    labels = tuple(f"u{i + 1}" for i in range(m)) + tuple(f"v{j + 1}" for j in range(n))
    return Graph(m + n, edges, labels)


def wheel(n: int) -> Graph:
    """W_n with ``n`` vertices in total: hub u (index 0) and rim v_1..v_{n-1}.

    Edge order: spokes u v_i, then rim edges v_i v_{i+1}, then v_1 v_{n-1}.
    """
    if n < 4:
        raise ParameterError(f"wheel requires n >= 4, got n={n}")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, rim)]
    edges.append((1, rim))
    labels = ("u",) + tuple(f"v{i}" for i in range(1, n))
    return Graph(n, tuple(edges), labels)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree on ``n`` vertices (Pruefer decoding)."""
    if n < 1:
        raise ParameterError(f"tree_random requires n >= 1, got n={n}")
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in code:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    a, b = sorted(leaves)
    edges.append((a, b))
    return Graph(n, tuple(edges))


def hypercube(dim: int) -> Graph:
    if dim < 1:
        raise ParameterError(f"hypercube requires dim >= 1, got {dim}")
    size = 1 << dim
    edges = tuple((v, v | (1 << b)) for v in range(size) for b in range(dim) if not v & (1 << b))
    return Graph(size, edges)


def generate(spec: FamilySpec) -> Graph:
    fam = spec.family
    if fam == "path":
        return path(_need(spec.n, "n", fam))
    if fam == "cycle":
        return cycle(_need(spec.n, "n", fam))
    if fam == "complete":
        return complete(_need(spec.n, "n", fam))
    if fam == "complete_bipartite":
        return complete_bipartite(_need(spec.m, "m", fam), _need(spec.n, "n", fam))
    if fam == "wheel":
        return wheel(_need(spec.n, "n", fam))
    if fam == "tree_random":
        return random_tree(_need(spec.n, "n", fam), spec.seed or 0)
    if fam == "regular_bipartite_named":
        name = spec.name or "complete_bipartite_rr"
        if name == "complete_bipartite_rr":
            r = _need(spec.n, "n", fam)
            return complete_bipartite(r, r)
        if name == "cube3":
            return hypercube(3)
        if name == "even_cycle":
            n = _need(spec.n, "n", fam)
            if n < 4 or n % 2:
                raise ParameterError(f"even_cycle requires even n >= 4, got n={n}")
            return cycle(n)
        raise ParameterError(f"unknown regular bipartite instance {name!r}; expected one of {REGULAR_BIPARTITE_NAMES}")
    raise ParameterError(f"unknown family {fam!r}; expected one of {FAMILIES}")


# ---------------------------------------------------------------------------
# structural queries


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _is_connected(g: Graph) -> bool:
    return g.n == 0 or min(distances_from(g, 0)) >= 0


def _require_connected(g: Graph, what: str) -> None:
    if g.n == 0:
        raise GraphError(f"{what} needs at least one vertex")
    if not _is_connected(g):
        raise DisconnectedGraphError(f"{what} is only defined for connected graphs")


def diameter(g: Graph) -> int:
    _require_connected(g, "diameter")
    return max(max(distances_from(g, s)) for s in range(g.n))


def bipartition(g: Graph) -> Optional[list[int]]:
    """Side (0 or 1) of every vertex, or None if ``g`` has an odd cycle.

    Each component is 2-colored from its lowest-index vertex, which gets side 0.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


@dataclass(frozen=True)
class StructureFlags:
    connected: bool
    bipartite: bool
    regular_degree: Optional[int]
    universal_vertices: tuple[int, ...]


def structure_flags(g: Graph) -> StructureFlags:
    degs = set(g.degrees)
    return StructureFlags(
        connected=_is_connected(g),
        bipartite=bipartition(g) is not None,
        regular_degree=degs.pop() if len(degs) == 1 else None,
        universal_vertices=tuple(v for v in range(g.n) if g.degrees[v] == g.n - 1),
    )


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and _is_connected(g)


def max_shortest_path_degree_sum(g: Graph) -> int:
    """Largest degree sum along any shortest path (a lone vertex counts).

    For each source, vertices are processed in BFS layers and each keeps the
    best degree sum over its shortest-path predecessors.
    """
    _require_connected(g, "max_shortest_path_degree_sum")
    deg = g.degrees
    best = 0
    for s in range(g.n):
        dist = distances_from(g, s)
        order = sorted(range(g.n), key=dist.__getitem__)
        acc = [0] * g.n
        for v in order:
            if v == s:
                acc[v] = deg[v]
            else:
                acc[v] = deg[v] + max(acc[w] for w, _ in g.adjacency[v] if dist[w] == dist[v] - 1)
            best = max(best, acc[v])
    return best


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def to_dot(
    g: Graph,
    vertex_colors: Optional[Sequence[int]] = None,
    edge_colors: Optional[Sequence[int]] = None,
    name: str = "G",
) -> str:
    """Undirected DOT text. Colors, when given, go into labels and a ``total_color`` attribute."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = [f"label={_dot_quote(g.label(v) if vertex_colors is None else f'{g.label(v)}:{vertex_colors[v]}')}"]
        if vertex_colors is not None:
            attrs.append(f"total_color={vertex_colors[v]}")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for k, (a, b) in enumerate(g.edges):
        if edge_colors is None:
            lines.append(f"  {a} -- {b};")
        else:
            lines.append(f"  {a} -- {b} [label={_dot_quote(str(edge_colors[k]))}, total_color={edge_colors[k]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
