"""Shared hypothesis strategies and brute-force oracles for the test suite.

The oracles here are deliberately naive (subset / permutation / edge-subset
enumeration).  They are slow but obviously correct, which is the point:
every clever algorithm in the package is checked against one of these on
small instances.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from cycle_ramsey import EdgeColoring, Graph, build_graph, complete_graph


def all_pairs(v: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(v), 2))


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 10):
    """An arbitrary simple graph; edge subsets drawn as a bitmask so
    shrinking moves toward the empty graph."""
    v = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = all_pairs(v)
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return build_graph(v, [p for i, p in enumerate(pairs) if mask >> i & 1])


@st.composite
def colorings(
    draw,
    min_vertices: int = 1,
    max_vertices: int = 8,
    max_colors: int = 3,
    complete: bool = False,
):
    """A k-edge-coloring of a random (or complete) host graph."""
    if complete:
        v = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
        base = complete_graph(v)
    else:
        base = draw(graphs(min_vertices=min_vertices, max_vertices=max_vertices))
    k = draw(st.integers(min_value=1, max_value=max_colors))
    m = base.edge_count
    colors = draw(
        st.lists(st.integers(min_value=1, max_value=k), min_size=m, max_size=m)
    )
    return EdgeColoring(base, k, tuple(colors))


# --------------------------------------------------------------------------
# brute-force oracles
# --------------------------------------------------------------------------


def brute_matching_number(G: Graph) -> int:
    """Maximum matching size by exhaustive branch over the edge list."""
    edges = G.sorted_edges
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1) and not (used >> v & 1):
                rec(j + 1, used | 1 << u | 1 << v, size + 1)

    rec(0, 0, 0)
    return best


def brute_cycle_lengths(G: Graph) -> set[int]:
    """Every length n for which G contains a cycle C_n, by trying all
    vertex subsets and all cyclic orders.  Only sane for <= 8 vertices."""
    found: set[int] = set()
    verts = range(G.vertex_count)
    for n in range(3, G.vertex_count + 1):
        hit = False
        for sub in itertools.combinations(verts, n):
            first, rest = sub[0], sub[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # each cycle counted in one direction only
                cyc = (first,) + perm
                if all(G.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
                    hit = True
                    break
            if hit:
                break
        if hit:
            found.add(n)
    return found


def brute_is_bipartite(G: Graph) -> bool:
    """Two-colorability by trying every side assignment per component."""
    color = [-1] * G.vertex_count
    for root in range(G.vertex_count):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in G.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True
