"""Closed-form bounds on the least (``w_tau``) and greatest (``W_tau``) number
of colors in an interval total coloring, and exact values known for the
graph families with explicit constructions.

Every bound is reported even when it does not apply; ``applicable`` says
whether its hypotheses hold for the graph. Bounds on graphs that have no
interval total coloring at all are still evaluated; whether the graph is
colorable is left to the caller.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .graph import (
    FamilySpec,
    Graph,
    ParameterError,
    bipartition,
    diameter,
    is_tree,
    max_degree,
    max_shortest_path_degree_sum,
    structure_flags,
)

__all__ = [
    "Bound",
    "BoundReport",
    "ExactValues",
    "bound_report",
    "complete_bipartite_parts",
    "known_chi_double_prime",
    "known_exact_values",
]


@dataclass(frozen=True)
class Bound:
    name: str
    kind: str  # "lower" | "upper"
    target: str  # "w_tau" | "W_tau"
    value: Optional[int]
    applicable: bool
    ref: str

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BoundReport:
    bounds: tuple[Bound, ...]

    def __iter__(self):
        return iter(self.bounds)

    def __getitem__(self, name: str) -> Bound:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def applicable(self, kind: str, target: Optional[str] = None) -> list[Bound]:
        return [b for b in self.bounds if b.applicable and b.kind == kind and (target is None or b.target == target)]

    def best_upper(self) -> Optional[int]:
        """Smallest applicable upper bound on W_tau (hence on every feasible t)."""
        vals = [b.value for b in self.applicable("upper", "W_tau")]
        return min(vals) if vals else None

    def to_json(self) -> list[dict]:
        return [b.to_json() for b in self.bounds]

    def to_table(self) -> str:
        header = f"{'name':<32} {'kind':<6} {'target':<7} {'value':>6} {'applies':<8} ref"
        rows = [header, "-" * len(header)]
        for b in self.bounds:
            value = "-" if b.value is None else str(b.value)
            rows.append(f"{b.name:<32} {b.kind:<6} {b.target:<7} {value:>6} {'yes' if b.applicable else 'no':<8} {b.ref}")
        return "\n".join(rows) + "\n"


def complete_bipartite_parts(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(m, n)`` if ``g`` is a complete bipartite graph K_{m,n}."""
    if g.n < 2:
        return None
    side = bipartition(g)
    if side is None:
        return None
    m = side.count(0)
    n = g.n - m
    if n == 0 or g.m != m * n:
        return None
    return m, n


def bound_report(g: Graph) -> BoundReport:
    flags = structure_flags(g)
    conn = flags.connected and g.n >= 1
    delta = max_degree(g)
    nv, ne = g.n, g.m
    r = flags.regular_degree
    out = [
        Bound("max_degree_plus_one", "lower", "w_tau", delta + 1, g.n >= 1, "total coloring needs Delta+1 colors"),
        Bound("order_plus_size", "upper", "W_tau", nv + ne, True, "each color used at least once"),
        Bound(
            "twice_order_minus_one", "upper", "W_tau", 2 * nv - 1, conn,
            "connected: lift to bipartite H, interval edge coloring bound |V(H)|-1",
        ),
    ]

    reg_ok = conn and r is not None and nv >= 2 * r + 2
    out.append(Bound(
        "regular_twice_order_minus_three", "upper", "W_tau", 2 * nv - 3, reg_ok,
        "connected r-regular with |V| >= 2r+2",
    ))

    if conn:
        path_sum = 1 + max_shortest_path_degree_sum(g)
        diam = 1 + (diameter(g) + 1) * delta
    else:
        path_sum = diam = None
    out.append(Bound(
        "shortest_path_degree_sum", "upper", "W_tau", path_sum, conn,
        "connected: 1 + max degree sum over shortest paths",
    ))
    out.append(Bound(
        "diameter_times_degree", "upper", "W_tau", diam, conn,
        "connected: 1 + (diam+1) * Delta",
    ))

    universal = flags.universal_vertices
    if len(universal) == 1:
        hub = universal[0]
        k = max((d for v, d in enumerate(g.degrees) if v != hub), default=0)
        out.append(Bound(
            "unique_universal_vertex", "upper", "W_tau", nv + 2 * k, True,
            f"unique universal vertex, k(G)={k}: |V| + 2k",
        ))
    else:
        out.append(Bound("unique_universal_vertex", "upper", "W_tau", None, False, "needs exactly one universal vertex"))

    rb = r is not None and flags.bipartite and g.n >= 1
    out.append(Bound(
        "regular_bipartite", "upper", "w_tau", (r + 2) if rb else None, rb,
        "r-regular bipartite: r + 2",
    ))
    tree = is_tree(g)
    out.append(Bound("tree", "upper", "w_tau", delta + 2 if tree else None, tree, "tree: Delta + 2"))

    parts = complete_bipartite_parts(g)
    out.append(Bound(
        "complete_bipartite", "lower", "W_tau", (nv + 1) if parts else None, parts is not None,
        "K_{m,n}: m + n + 1",
    ))
    return BoundReport(tuple(out))


def known_chi_double_prime(spec: FamilySpec) -> int:
    """Total chromatic number of a cycle or complete graph."""
    n = spec.n
    if spec.family == "cycle":
        if n is None or n < 3:
            raise ParameterError("cycle requires n >= 3")
        return 3 if n % 3 == 0 else 4
    if spec.family == "complete":
        if n is None or n < 1:
            raise ParameterError("complete requires n >= 1")
        return n if n % 2 else n + 1
    raise ParameterError(f"no known total chromatic number for family {spec.family!r}")


@dataclass(frozen=True)
class ExactValues:
    w_tau: Optional[int]
    W_tau: Optional[int]
    # inclusive ranges of t known to be feasible; None when not stated
    spectrum_ranges: Optional[tuple[tuple[int, int], ...]]


def known_exact_values(spec: FamilySpec) -> ExactValues:
    n = spec.n
    fam = spec.family
    if n is None:
        raise ParameterError(f"{fam} requires n")
    if fam == "path":
        if n < 1:
            raise ParameterError("path requires n >= 1")
        return ExactValues(None, 2 * n - 1, None)
    if fam == "cycle":
        if n < 3:
            raise ParameterError("cycle requires n >= 3")
        return ExactValues(3 if n % 3 == 0 else 4, n + 2, None)
    if fam == "complete":
        if n < 1:
            raise ParameterError("complete requires n >= 1")
        w = n if n % 2 else 3 * n // 2
        return ExactValues(w, 2 * n - 1, ((w, 2 * n - 1),))
    if fam == "wheel":
        if n < 4:
            raise ParameterError("wheel requires n >= 4")
        w = 6 if n == 4 else n
        big = n + 3 if n <= 8 else n + 4
        return ExactValues(w, big, ((w, big),))
    raise ParameterError(f"no known exact values for family {fam!r}")
