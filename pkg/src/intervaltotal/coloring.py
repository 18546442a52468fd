"""Total coloring certificates and their verification.

Colors are 1-based. A certificate declares its color count ``t``; the
verifier checks the declared ``t`` rather than inferring it from the
largest color used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, GraphError, graph_from_json, graph_to_json, structure_flags

__all__ = [
    "TotalColoring",
    "Failure",
    "VerifyOutcome",
    "VertexPalette",
    "CertificateError",
    "PreconditionError",
    "CLAUSES",
    "palette",
    "palette_report",
    "verify_interval_total",
    "verify_total_proper",
    "invert",
    "check_continuity",
    "certificate_to_json",
    "certificate_from_json",
]

CLAUSES = (
    "proper-vertex",
    "proper-edge",
    "incidence",
    "palette-interval",
    "color-unused",
    "color-out-of-range",
)


class CertificateError(ValueError):
    """Certificate does not fit its graph (wrong lengths, bad JSON)."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class TotalColoring:
    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_colors", tuple(int(c) for c in self.vertex_colors))
        object.__setattr__(self, "edge_colors", tuple(int(c) for c in self.edge_colors))

    def colors(self) -> tuple[int, ...]:
        return self.vertex_colors + self.edge_colors

    def check_fits(self, g: Graph) -> None:
        if len(self.vertex_colors) != g.n:
            raise CertificateError(f"{len(self.vertex_colors)} vertex colors for {g.n} vertices")
        if len(self.edge_colors) != g.m:
            raise CertificateError(f"{len(self.edge_colors)} edge colors for {g.m} edges")


@dataclass(frozen=True)
class Failure:
    clause: str
    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()
    colors: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [self.clause]
        if self.vertices:
            parts.append("vertices=" + ",".join(map(str, self.vertices)))
        if self.edges:
            parts.append("edges=" + ",".join(map(str, self.edges)))
        if self.colors:
            parts.append("colors=" + ",".join(map(str, self.colors)))
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"clause": self.clause, "vertices": list(self.vertices), "edges": list(self.edges), "colors": list(self.colors)}


@dataclass(frozen=True)
class VerifyOutcome:
    failures: tuple[Failure, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.valid

    def clauses(self) -> set[str]:
        return {f.clause for f in self.failures}

    def to_json(self) -> dict:
        return {"valid": self.valid, "failures": [f.to_json() for f in self.failures]}


@dataclass(frozen=True)
class VertexPalette:
    vertex: int
    colors: tuple[int, ...]
    expected_span: int

    @property
    def is_interval(self) -> bool:
        c = self.colors
        return len(c) == self.expected_span and c[-1] - c[0] == self.expected_span - 1


def palette(g: Graph, c: TotalColoring, v: int) -> frozenset[int]:
    """The set of colors on ``v`` and its incident edges."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex index {v} out of range 0..{g.n - 1}")
    c.check_fits(g)
    return frozenset([c.vertex_colors[v], *(c.edge_colors[k] for _, k in g.adjacency[v])])


def palette_report(g: Graph, c: TotalColoring) -> list[VertexPalette]:
    c.check_fits(g)
    return [VertexPalette(v, tuple(sorted(palette(g, c, v))), g.degrees[v] + 1) for v in range(g.n)]


def _proper_failures(g: Graph, c: TotalColoring) -> list[Failure]:
    vc, ec = c.vertex_colors, c.edge_colors
    out = []
    for k, (a, b) in enumerate(g.edges):
        if vc[a] == vc[b]:
            out.append(Failure("proper-vertex", (a, b), (k,), (vc[a],)))
    for v in range(g.n):
        star = g.adjacency[v]
        for i in range(len(star)):
            for j in range(i + 1, len(star)):
                e, f = star[i][1], star[j][1]
                if ec[e] == ec[f]:
                    out.append(Failure("proper-edge", (v,), (e, f), (ec[e],)))
        for _, e in star:
            if ec[e] == vc[v]:
                out.append(Failure("incidence", (v,), (e,), (vc[v],)))
    return out


def verify_total_proper(g: Graph, c: TotalColoring) -> VerifyOutcome:
    """Check only that ``c`` is a total coloring (no clash between adjacent
    vertices, adjacent edges, or a vertex and an incident edge)."""
    c.check_fits(g)
    return VerifyOutcome(tuple(_proper_failures(g, c)))


def _range_failures(g: Graph, c: TotalColoring) -> list[Failure]:
    out = [Failure("color-out-of-range", vertices=(v,), colors=(x,)) for v, x in enumerate(c.vertex_colors) if not 1 <= x <= c.t]
    out += [Failure("color-out-of-range", edges=(k,), colors=(x,)) for k, x in enumerate(c.edge_colors) if not 1 <= x <= c.t]
    return out


def _palette_failures(g: Graph, c: TotalColoring) -> list[Failure]:
    return [
        Failure("palette-interval", (p.vertex,), colors=p.colors)
        for p in palette_report(g, c)
        if not p.is_interval
    ]


def _unused(c: TotalColoring) -> list[int]:
    used = set(c.colors())
    return [x for x in range(1, c.t + 1) if x not in used]


def verify_interval_total(g: Graph, c: TotalColoring) -> VerifyOutcome:
    """Check every clause of an interval total ``c.t``-coloring.

    All violations are collected; nothing stops at the first failure.
    """
    c.check_fits(g)
    failures = _proper_failures(g, c)
    failures += _palette_failures(g, c)
    failures += [Failure("color-unused", colors=(x,)) for x in _unused(c)]
    failures += _range_failures(g, c)
    return VerifyOutcome(tuple(failures))


def invert(c: TotalColoring) -> TotalColoring:
    """Mirror every color ``x`` to ``t + 1 - x``."""
    flip = c.t + 1
    return TotalColoring(
        tuple(flip - x for x in c.vertex_colors),
        tuple(flip - x for x in c.edge_colors),
        c.t,
    )


def check_continuity(g: Graph, c: TotalColoring) -> bool:
    """Whether every color of ``[1, t]`` is used by ``c``.

    The input must already be a total coloring of the connected graph ``g``
    with interval palettes whose smallest color is 1 and largest is ``t``;
    on such inputs the answer is expected to always be True.
    """
    c.check_fits(g)
    problems = []
    if g.n == 0 or not structure_flags(g).connected:
        problems.append("connected")
    problems += sorted({f.clause for f in _proper_failures(g, c) + _palette_failures(g, c)})
    colors = c.colors()
    if min(colors, default=None) != 1:
        problems.append("min-color-is-1")
    if max(colors, default=None) != c.t:
        problems.append("max-color-is-t")
    if problems:
        raise PreconditionError("continuity check preconditions violated: " + ", ".join(problems))
    return not _unused(c)


# ---------------------------------------------------------------------------
# certificate JSON


def certificate_to_json(g: Graph, c: TotalColoring, **extra) -> dict:
    out = {
        "graph": graph_to_json(g),
        "t": c.t,
        "vertex_colors": list(c.vertex_colors),
        "edge_colors": list(c.edge_colors),
    }
    out.update(extra)
    return out


def certificate_from_json(data: dict | str) -> tuple[Graph, TotalColoring]:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        g = graph_from_json(data["graph"])
        c = TotalColoring(tuple(data["vertex_colors"]), tuple(data["edge_colors"]), int(data["t"]))
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"malformed certificate JSON: {exc}") from exc
    c.check_fits(g)
    return g, c

