"""Dimension bookkeeping for moduli of graph flows.

A FlowGraph is a finite connected graph whose edges are flow lines: incoming
edges arrive from infinity at a vertex, outgoing edges leave to infinity,
internal edges join two vertices.  The moduli space of such graph flows with
prescribed limiting critical points has expected dimension

    sum(incoming indices) - sum(outgoing indices)
        - dim M * (b_1(graph) + n_incoming - 1)

and the only operation the package realizes geometrically is the Y-graph cup
product, delegated to the Schubert calculus engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import triple_product
from .symbols import SchubertSymbol, critical_index

INCOMING = "incoming"
INTERNAL = "internal"
OUTGOING = "outgoing"


@dataclass(frozen=True)
class FlowGraph:
    """Vertices plus edges tagged incoming / internal / outgoing.

    Incoming and outgoing edges have a single attached vertex (their other
    end is at infinity); internal edges join two vertices.  Edge entries are
    (vertex, vertex_or_None, kind).
    """

    vertices: frozenset
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b, kind in edges:
            if kind not in (INCOMING, INTERNAL, OUTGOING):
                raise ValueError(f"unknown edge kind {kind!r}")
            if a not in self.vertices:
                raise ValueError(f"edge endpoint {a!r} is not a vertex")
            if kind == INTERNAL:
                if b not in self.vertices:
                    raise ValueError(f"internal edge endpoint {b!r} is not a vertex")
            elif b is not None:
                raise ValueError(f"{kind} edges have one free end; got second endpoint {b!r}")

    @property
    def n_incoming(self) -> int:
        return sum(1 for e in self.edges if e[2] == INCOMING)

    @property
    def n_internal(self) -> int:
        return sum(1 for e in self.edges if e[2] == INTERNAL)

    @property
    def n_outgoing(self) -> int:
        return sum(1 for e in self.edges if e[2] == OUTGOING)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for a, b, kind in self.edges:
            if kind == INTERNAL:
                adj[a].add(b)
                adj[b].add(a)
        seen = set()
        stack = [next(iter(self.vertices))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v] - seen)
        return seen == self.vertices

    def to_json(self) -> dict:
        return {
            "vertices": sorted(str(v) for v in self.vertices),
            "edges": [[a, b, kind] for a, b, kind in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlowGraph":
        return cls(frozenset(data["vertices"]),
                   tuple((a, b, kind) for a, b, kind in data["edges"]))


@dataclass(frozen=True)
class LabeledEnds:
    """Morse indices attached to the free ends, plus the ambient dimension."""

    incoming: tuple[int, ...]
    outgoing: tuple[int, ...]
    dim_m: int

    def __post_init__(self):
        object.__setattr__(self, "incoming", tuple(int(x) for x in self.incoming))
        object.__setattr__(self, "outgoing", tuple(int(x) for x in self.outgoing))
        for idx in self.incoming + self.outgoing:
            if not 0 <= idx <= self.dim_m:
                raise ValueError(f"index {idx} outside 0..dim M = {self.dim_m}")


def graph_first_betti(g: FlowGraph) -> int:
    """b_1 of the internal skeleton; free ends are contractible whiskers."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    return g.n_internal - len(g.vertices) + 1


def moduli_dimension(g: FlowGraph, ends: LabeledEnds) -> int:
    """Expected dimension of the moduli of graph flows with these end labels.

    May be negative, in which case the moduli space is expected empty.
    """
    if len(ends.incoming) != g.n_incoming or len(ends.outgoing) != g.n_outgoing:
        raise ValueError(
            f"labels ({len(ends.incoming)} in, {len(ends.outgoing)} out) do not "
            f"match graph ends ({g.n_incoming} in, {g.n_outgoing} out)"
        )
    b1 = graph_first_betti(g)
    return (
        sum(ends.incoming)
        - sum(ends.outgoing)
        - ends.dim_m * (b1 + g.n_incoming - 1)
    )


def interval_graph() -> FlowGraph:
    """One vertex, one incoming and one outgoing end: a single broken line."""
    return FlowGraph({"v"}, (("v", None, INCOMING), ("v", None, OUTGOING)))


def y_graph(n_in: int = 3) -> FlowGraph:
    """Single vertex with n_in incoming ends (cup-product shape for n_in = 3)."""
    return FlowGraph({"v"}, tuple(("v", None, INCOMING) for _ in range(n_in)))


def two_in_one_out_tree() -> FlowGraph:
    """Two incoming ends and one outgoing end on a single vertex."""
    return FlowGraph(
        {"v"},
        (("v", None, INCOMING), ("v", None, INCOMING), ("v", None, OUTGOING)),
    )


def cup_product_instance(u: SchubertSymbol, v: SchubertSymbol, w: SchubertSymbol) -> int:
    """Triple intersection number realized by the Y-graph moduli count.

    The incoming ends carry the Morse indices of the critical points for -f
    (so each class z_u sits in cohomological degree dim M - index); the
    moduli space must be zero-dimensional before delegating to the
    cohomology engine.
    """
    if not (u.ambient == v.ambient == w.ambient):
        raise ValueError("symbols from different Grassmannians")
    k, n = u.ambient
    dim_m = 2 * k * (n - k)
    labels = LabeledEnds(
        tuple(critical_index(s, "for_minus_f") for s in (u, v, w)), (), dim_m
    )
    expected = moduli_dimension(y_graph(3), labels)
    if expected != 0:
        raise ValueError(
            f"moduli dimension {expected} != 0; labels do not cut out a number"
        )
    return triple_product(u, v, w)
