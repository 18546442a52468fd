"""Bipartite double cover with diagonals, and interval edge colorings.

For a graph G on v_1..v_n the auxiliary graph H has two copies u_i, w_i of
every vertex, the diagonal u_iw_i, and both u_iw_j and u_jw_i for every edge
v_iv_j. An interval total t-coloring of G lifts to an interval edge
t-coloring of H by giving mirror edges the color of their G-edge and the
diagonal u_iw_i the color of v_i.

Vertex u_i of H is index i and w_i is index n+i. H lists the n diagonals
first, then for every G-edge {i, j} with i < j the pair u_iw_j, u_jw_i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import CertificateError, Failure, TotalColoring, VerifyOutcome, verify_interval_total
from .graph import Graph, graph_from_json, graph_to_json

__all__ = [
    "AuxiliaryGraph",
    "EdgeColoring",
    "AsymmetricColoringError",
    "build_auxiliary",
    "lift_coloring",
    "unlift_coloring",
    "verify_interval_edge",
    "auxiliary_to_json",
    "lifted_to_json",
    "lifted_from_json",
]


class AsymmetricColoringError(ValueError):
    """Edge coloring of H gives the two mirrors of some G-edge different colors."""


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))


@dataclass(frozen=True)
class AuxiliaryGraph:
    graph: Graph
    base_n: int
    # ("diag", i) or ("mirror", i, j), parallel to graph.edges
    provenance: tuple[tuple, ...]

    def u(self, i: int) -> int:
        return i

    def w(self, i: int) -> int:
        return self.base_n + i


def build_auxiliary(g: Graph) -> AuxiliaryGraph:
    n = g.n
    edges = [(i, n + i) for i in range(n)]
    prov: list[tuple] = [("diag", i) for i in range(n)]
    for a, b in g.edges:
        i, j = min(a, b), max(a, b)
        edges += [(i, n + j), (j, n + i)]
        prov += [("mirror", i, j), ("mirror", i, j)]
    labels = tuple(f"u{i + 1}" for i in range(n)) + tuple(f"w{i + 1}" for i in range(n))
    return AuxiliaryGraph(Graph(2 * n, tuple(edges), labels), n, tuple(prov))


def lift_coloring(g: Graph, c: TotalColoring) -> tuple[AuxiliaryGraph, EdgeColoring]:
    """Lift a valid interval total coloring of ``g`` to an edge coloring of H."""
    outcome = verify_interval_total(g, c)
    if not outcome.valid:
        raise CertificateError("input is not an interval total coloring: " + "; ".join(map(str, outcome.failures)))
    aux = build_auxiliary(g)
    colors = list(c.vertex_colors)
    for x in c.edge_colors:
        colors += [x, x]
    return aux, EdgeColoring(tuple(colors), c.t)


def unlift_coloring(aux: AuxiliaryGraph, ec: EdgeColoring) -> TotalColoring:
    """Read a total coloring of G back off a mirror-symmetric coloring of H.

    Only colorings where u_iw_j and u_jw_i agree for every G-edge can be
    read back; others raise :class:`AsymmetricColoringError`.
    """
    n = aux.base_n
    if len(ec.colors) != aux.graph.m:
        raise CertificateError(f"{len(ec.colors)} edge colors for {aux.graph.m} edges")
    edge_colors = []
    for k in range(n, aux.graph.m, 2):
        x, y = ec.colors[k], ec.colors[k + 1]
        if x != y:
            _, i, j = aux.provenance[k]
            raise AsymmetricColoringError(f"mirror edges of v{i + 1}v{j + 1} colored {x} and {y}")
        edge_colors.append(x)
    return TotalColoring(ec.colors[:n], tuple(edge_colors), ec.t)


def verify_interval_edge(h: Graph, ec: EdgeColoring) -> VerifyOutcome:
    """Check an interval edge t-coloring: proper, consecutive colors at each
    vertex, every color of ``[1, t]`` used, nothing outside ``[1, t]``."""
    if len(ec.colors) != h.m:
        raise CertificateError(f"{len(ec.colors)} edge colors for {h.m} edges")
    col = ec.colors
    failures = []
    for v in range(h.n):
        star = [k for _, k in h.adjacency[v]]
        for a in range(len(star)):
            for b in range(a + 1, len(star)):
                if col[star[a]] == col[star[b]]:
                    failures.append(Failure("proper-edge", (v,), (star[a], star[b]), (col[star[a]],)))
        seen = sorted({col[k] for k in star})
        if seen and (len(seen) != len(star) or seen[-1] - seen[0] != len(star) - 1):
            failures.append(Failure("palette-interval", (v,), colors=tuple(seen)))
    used = set(col)
    failures += [Failure("color-unused", colors=(x,)) for x in range(1, ec.t + 1) if x not in used]
    failures += [Failure("color-out-of-range", edges=(k,), colors=(x,)) for k, x in enumerate(col) if not 1 <= x <= ec.t]
    return VerifyOutcome(tuple(failures))


def auxiliary_to_json(aux: AuxiliaryGraph) -> dict:
    out = graph_to_json(aux.graph)
    out["provenance"] = [{"diag": p[1]} if p[0] == "diag" else {"mirror": [p[1], p[2]]} for p in aux.provenance]
    return out


def lifted_to_json(aux: AuxiliaryGraph, ec: EdgeColoring) -> dict:
    return {"graph": auxiliary_to_json(aux), "t": ec.t, "edge_colors": list(ec.colors)}


def lifted_from_json(data: dict | str) -> tuple[Graph, EdgeColoring]:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        h = graph_from_json(data["graph"])
        ec = EdgeColoring(tuple(data["edge_colors"]), int(data["t"]))
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"malformed edge-coloring JSON: {exc}") from exc
    if len(ec.colors) != h.m:
        raise CertificateError(f"{len(ec.colors)} edge colors for {h.m} edges")
    return h, ec
