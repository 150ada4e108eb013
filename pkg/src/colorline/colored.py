"""Edge-colored graphs and the color-line construction.

The color-line graph of an edge-colored graph H has one vertex per edge of H;
two vertices are adjacent when the underlying edges share an endpoint (an
L-edge) or share a color (a C-edge). Vertex i of the color-line graph is the
i-th edge of H in lexicographic order, so results are reproducible bit for
bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from collections.abc import Iterable, Mapping

from .core import Edge, Graph, Matching, VertexSet, bits, set_of, sorted_edge
from .errors import CapabilityError, GraphArgumentError


@dataclass(frozen=True)
class EdgeColoredGraph:
    """A graph plus a total edge coloring with dense color ids 1..k.

    ``colors[i]`` is the color of ``graph.edges()[i]``. Construction
    normalizes arbitrary labels to 1..k by first appearance in edge order.
    """

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        edges = self.graph.edges()
        if len(self.colors) != len(edges):
            raise GraphArgumentError(
                f"{len(edges)} edges but {len(self.colors)} colors supplied"
            )
        seen = set(self.colors)
        k = max(seen, default=0)
        if seen != set(range(1, k + 1)):
            raise GraphArgumentError("color ids must be contiguous 1..k, each used")

    @classmethod
    def from_color_map(cls, graph: Graph, coloring: Mapping[Edge, object]) -> EdgeColoredGraph:
        """Build from an edge -> label map; labels are normalized to 1..k."""
        edges = graph.edges()
        normalized: dict[object, int] = {}
        colors = []
        for u, v in edges:
            label = coloring.get((u, v), coloring.get((v, u)))
            if label is None:
                raise GraphArgumentError(f"edge ({u},{v}) has no color")
            colors.append(normalized.setdefault(label, len(normalized) + 1))
        return cls(graph, tuple(colors))

    @classmethod
    def rainbow(cls, graph: Graph) -> EdgeColoredGraph:
        """Every edge its own color."""
        return cls(graph, tuple(range(1, len(graph.edges()) + 1)))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def edge_order(self) -> tuple[Edge, ...]:
        return self.graph.edges()

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.edges().index(sorted_edge(u, v))]

    def color_classes(self) -> list[frozenset[Edge]]:
        """Edges grouped by color, index c-1 for color c."""
        classes: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, c in zip(self.graph.edges(), self.colors):
            classes[c - 1].add(e)
        return [frozenset(c) for c in classes]


def validate_proper(h: EdgeColoredGraph) -> bool:
    """True iff no two incident edges of h share a color."""
    edges = h.graph.edges()
    at_vertex: list[set[int]] = [set() for _ in range(h.graph.n)]
    for (u, v), c in zip(edges, h.colors):
        if c in at_vertex[u] or c in at_vertex[v]:
            return False
        at_vertex[u].add(c)
        at_vertex[v].add(c)
    return True


@dataclass(frozen=True)
class ColorLineResult:
    """Color-line graph of a root, with the incidence/color edge split.

    ``edge_of_vertex[i]`` is the root edge behind vertex i. An edge of ``cl``
    can be both an L-edge and a C-edge only when the root coloring is not
    proper.
    """

    cl: Graph
    edge_of_vertex: tuple[Edge, ...]
    l_edges: frozenset[Edge]
    c_edges: frozenset[Edge]


def color_line_graph(h: EdgeColoredGraph) -> ColorLineResult:
    """Color-line graph: root edges adjacent iff incident or same color.

    Isolated root vertices carry no edges and simply do not appear.
    """
    edges = h.graph.edges()
    m = len(edges)
    from .core import MAX_VERTICES

    if m > MAX_VERTICES:
        raise CapabilityError(f"root has {m} edges; color-line graphs cap at {MAX_VERTICES}")
    l_edges = set()
    c_edges = set()
    cl_edges = []
    for i, j in itertools.combinations(range(m), 2):
        (a, b), (c, d) = edges[i], edges[j]
        incident = len({a, b, c, d}) < 4
        same_color = h.colors[i] == h.colors[j]
        if incident:
            l_edges.add((i, j))
        if same_color:
            c_edges.add((i, j))
        if incident or same_color:
            cl_edges.append((i, j))
    return ColorLineResult(
        cl=Graph(m, cl_edges),
        edge_of_vertex=edges,
        l_edges=frozenset(l_edges),
        c_edges=frozenset(c_edges),
    )


def line_graph(h: Graph) -> ColorLineResult:
    """Plain line graph, realized as the color-line graph of the rainbow
    coloring (incidence only)."""
    return color_line_graph(EdgeColoredGraph.rainbow(h))


RAINBOW_MATCHING_MAX_EDGES = 20


def max_rainbow_matching(h: EdgeColoredGraph) -> Matching:
    """A maximum matching of h whose edges have pairwise distinct colors.

    Exhaustive branch over edges in lexicographic order; sizes here are tiny.
    """
    edges = h.graph.edges()
    if len(edges) > RAINBOW_MATCHING_MAX_EDGES:
        raise CapabilityError(
            f"rainbow matching search is capped at {RAINBOW_MATCHING_MAX_EDGES} edges"
        )
    best: list[Edge] = []
    chosen: list[Edge] = []

    def search(i: int, used_vertices: int, used_colors: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        u, v = edges[i]
        c = h.colors[i]
        if not (used_vertices >> u & 1 or used_vertices >> v & 1) and c not in used_colors:
            chosen.append((u, v))
            search(i + 1, used_vertices | 1 << u | 1 << v, used_colors | {c})
            chosen.pop()
        search(i + 1, used_vertices, used_colors)

    search(0, 0, frozenset())
    return frozenset(best)


INDEPENDENT_SET_MAX_VERTICES = 20


def max_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set (branch and bound on the vertex list)."""
    if g.n > INDEPENDENT_SET_MAX_VERTICES:
        raise CapabilityError(
            f"independent set search is capped at {INDEPENDENT_SET_MAX_VERTICES} vertices"
        )
    best = 0

    def search(allowed: int, current: int) -> None:
        nonlocal best
        if not allowed:
            if current.bit_count() > best.bit_count():
                best = current
            return
        if current.bit_count() + allowed.bit_count() <= best.bit_count():
            return
        v = (allowed & -allowed).bit_length() - 1
        search(allowed & ~(1 << v) & ~g.adj_mask(v), current | 1 << v)
        search(allowed & ~(1 << v), current)

    search((1 << g.n) - 1, 0)
    return set_of(best)
