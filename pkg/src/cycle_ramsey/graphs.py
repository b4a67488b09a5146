"""Immutable graph and edge-coloring primitives.

Vertices are dense 0-indexed integers.  Equality is by (vertex count,
edge set); isomorphism never enters the core semantics.  Edges are
stored as normalized pairs (u, v) with u < v, so the edge set can never
hold a duplicate or a reversed copy of an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ColorOutOfRange,
    CycleTooShort,
    DuplicateEdge,
    LoopEdge,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise VertexOutOfRange("vertex_count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"self-loop at vertex {u}")
            if u > v:
                raise VertexOutOfRange(f"edge ({u},{v}) is not normalized (u < v)")
            if u < 0 or v >= self.vertex_count:
                raise VertexOutOfRange(
                    f"edge ({u},{v}) outside vertex range 0..{self.vertex_count - 1}"
                )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency as bitmasks (bit w set iff (v, w) is an edge)."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor lists, consistent with the edge set."""
        lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.sorted_edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in lists)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges


def build_graph(vertex_count: int, edge_list) -> Graph:
    """Construct a Graph, rejecting loops, duplicates and bad endpoints.

    Edge order and orientation in `edge_list` are irrelevant: (u, v) and
    (v, u) are the same edge, and repeating either is a duplicate.
    """
    seen: set[Edge] = set()
    for u, v in edge_list:
        if u == v:
            raise LoopEdge(f"self-loop at vertex {u}")
        if min(u, v) < 0 or max(u, v) >= vertex_count:
            raise VertexOutOfRange(
                f"edge ({u},{v}) outside vertex range 0..{vertex_count - 1}"
            )
        e = normalize_edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
    return Graph(vertex_count, frozenset(seen))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise VertexOutOfRange("order must be non-negative")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise CycleTooShort(f"cycle length {n} < 3")
    return Graph(n, frozenset(normalize_edge(i, (i + 1) % n) for i in range(n)))


def induced_subgraph(G: Graph, W) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on W, relabeled to 0..|W|-1 in increasing id order.

    Returns (subgraph, kept) where kept[i] is the original id of new
    vertex i, so witnesses found in the subgraph can be lifted back.
    """
    kept = tuple(sorted(set(W)))
    for w in kept:
        if w < 0 or w >= G.vertex_count:
            raise VertexOutOfRange(f"vertex {w} not in graph of order {G.vertex_count}")
    index = {w: i for i, w in enumerate(kept)}
    inside = set(kept)
    edges = frozenset(
        normalize_edge(index[u], index[v])
        for u, v in G.edges
        if u in inside and v in inside
    )
    return Graph(len(kept), edges), kept


@dataclass(frozen=True)
class EdgeColoring:
    """A total assignment of colors 1..color_count to the edges of `base`.

    Colors are stored positionally against `base.sorted_edges`, which
    keeps the value canonical: two colorings are equal exactly when they
    color the same graph the same way.
    """

    base: Graph
    color_count: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.color_count < 1:
            raise ColorOutOfRange("need at least one color")
        if len(self.colors) != self.base.edge_count:
            raise ColorOutOfRange(
                f"{len(self.colors)} colors for {self.base.edge_count} edges"
            )
        for c in self.colors:
            if not 1 <= c <= self.color_count:
                raise ColorOutOfRange(f"color {c} outside 1..{self.color_count}")

    @cached_property
    def assignment(self) -> dict[Edge, int]:
        """Edge -> color map covering exactly the edges of the base graph."""
        return dict(zip(self.base.sorted_edges, self.colors))

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[normalize_edge(u, v)]


def make_coloring(base: Graph, color_count: int, assignment) -> EdgeColoring:
    """Build an EdgeColoring from an edge -> color mapping.

    The mapping must cover every edge of `base` and nothing else.
    """
    normalized = {normalize_edge(u, v): c for (u, v), c in assignment.items()}
    extra = set(normalized) - base.edges
    if extra:
        raise VertexOutOfRange(f"colored edges not in graph: {sorted(extra)[:3]}")
    missing = base.edges - set(normalized)
    if missing:
        raise ColorOutOfRange(f"uncolored edges: {sorted(missing)[:3]}")
    return EdgeColoring(
        base, color_count, tuple(normalized[e] for e in base.sorted_edges)
    )


def constant_coloring(base: Graph, color_count: int = 1, color: int = 1) -> EdgeColoring:
    if not 1 <= color <= color_count:
        raise ColorOutOfRange(f"color {color} outside 1..{color_count}")
    return EdgeColoring(base, color_count, (color,) * base.edge_count)


def color_class(col: EdgeColoring, i: int) -> Graph:
    """Spanning subgraph of the base carrying exactly the color-i edges."""
    if not 1 <= i <= col.color_count:
        raise ColorOutOfRange(f"color {i} outside 1..{col.color_count}")
    edges = frozenset(
        e for e, c in zip(col.base.sorted_edges, col.colors) if c == i
    )
    return Graph(col.base.vertex_count, edges)


def induced_coloring(col: EdgeColoring, W) -> tuple[EdgeColoring, tuple[int, ...]]:
    """Restrict a coloring to the subgraph induced on W (relabeled)."""
    sub, kept = induced_subgraph(col.base, W)
    index = {w: i for i, w in enumerate(kept)}
    assignment = {}
    for (u, v), c in col.assignment.items():
        if u in index and v in index:
            assignment[normalize_edge(index[u], index[v])] = c
    return make_coloring(sub, col.color_count, assignment), kept
