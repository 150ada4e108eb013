"""Exhaustive ground-truth deciders for (proper) k-color-line membership.

These deliberately share no search strategy with the recognizers: they sweep
every clique partition of the vertex set (and, for the non-proper variant,
every admissible set of extra incidences inside the color classes), so they
are usable as independent oracles on small instances. Also holds the
bipartite-realizability gadget: completing the two sides of a bipartite
graph to cliques and hanging one pendant-ish apex on each side turns
edge-intersection realizability into 2-color-line membership.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from collections.abc import Iterator

from .colored import EdgeColoredGraph
from .core import Edge, Graph, VertexSet, graph_without_edges, sorted_edge
from .errors import (
    BudgetExceededError,
    CapabilityError,
    GraphArgumentError,
    InternalContradictionError,
)
from .linegraph import is_line_graph, recognize_line_graph
from .partitions import clique_partitions
from .recognize import ProperCertificate, check_partition_characterization

ORACLE_MAX_VERTICES = 8


def _check_oracle_cap(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise CapabilityError(
            f"exhaustive oracles are capped at {ORACLE_MAX_VERTICES} vertices"
        )


class _Deadline:
    def __init__(self, budget_secs: float | None):
        self.until = None if budget_secs is None else time.monotonic() + budget_secs

    def check(self) -> None:
        if self.until is not None and time.monotonic() > self.until:
            raise BudgetExceededError("oracle wall-clock budget exhausted")


def lift_k1(g: Graph) -> Graph:
    """g plus one isolated vertex."""
    return Graph(g.n + 1, g.edges())


def oracle_k_color_line(
    g: Graph, k: int, budget_secs: float | None = None
) -> EdgeColoredGraph | None:
    """Exhaustive decision of k-color-line membership, with witness.

    Any root coloring splits the vertices into at most k clique classes
    (same-color pairs are always adjacent); between classes adjacency must be
    pure incidence, while inside a class incidences are free. So: for every
    clique partition, and every way F of adding within-class pairs to the
    cross-class edges, accept iff the result is a line graph. Smallest F
    first keeps accepting instances quick.
    """
    if k < 1:
        raise GraphArgumentError(f"color count must be at least 1, got {k}")
    _check_oracle_cap(g)
    deadline = _Deadline(budget_secs)
    for partition in clique_partitions(g, max_blocks=min(k, g.n)):
        deadline.check()
        within: list[Edge] = []
        for cls in partition:
            within.extend(itertools.combinations(sorted(cls), 2))
        cross = graph_without_edges(g, within)
        for size in range(len(within) + 1):
            for extra in itertools.combinations(within, size):
                deadline.check()
                candidate = _with_edges(cross, extra)
                if is_line_graph(candidate):
                    return _witness_from_partition(g, candidate, partition)
    return None


def _with_edges(g: Graph, extra: tuple[Edge, ...]) -> Graph:
    adj = list(g._adj)
    for u, v in extra:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.from_adj_masks(tuple(adj))


def _witness_from_partition(
    g: Graph, incidence: Graph, partition: tuple[VertexSet, ...]
) -> EdgeColoredGraph:
    cert = recognize_line_graph(incidence)
    if not cert.is_line:
        raise InternalContradictionError("line decision and reconstruction disagree")
    root, v2e = cert.root, cert.vertex_to_edge
    class_of = {}
    for i, cls in enumerate(partition, start=1):
        for v in cls:
            class_of[v] = i
    edge_index = {e: i for i, e in enumerate(root.edges())}
    colors = [0] * len(edge_index)
    for v in range(g.n):
        colors[edge_index[v2e[v]]] = class_of[v]
    ecg = EdgeColoredGraph(root, tuple(colors))
    # Replay: incidence-or-color of the root must reproduce g exactly.
    for u, v in itertools.combinations(range(g.n), 2):
        eu, ev = v2e[u], v2e[v]
        touching = len({*eu, *ev}) < 4
        same = class_of[u] == class_of[v]
        if (touching or same) != g.has_edge(u, v):
            raise InternalContradictionError(
                f"oracle witness replay failed at vertex pair ({u},{v})"
            )
    return ecg


def oracle_proper_k_color_line(
    g: Graph, k: int, budget_secs: float | None = None
) -> ProperCertificate | None:
    """Exhaustive proper variant: sweep every partition of the vertices into
    at most k cliques (restricted-growth order) and accept iff deleting all
    class edges leaves a line graph. Returns the first full certificate."""
    if k < 1:
        raise GraphArgumentError(f"color count must be at least 1, got {k}")
    _check_oracle_cap(g)
    for partition in accepting_partitions(g, k, budget_secs):
        return check_partition_characterization(g, partition)
    return None


def accepting_partitions(
    g: Graph, k: int, budget_secs: float | None = None
) -> Iterator[tuple[VertexSet, ...]]:
    """All clique partitions into at most k classes whose class-edge deletion
    leaves a line graph, in restricted-growth order."""
    _check_oracle_cap(g)
    deadline = _Deadline(budget_secs)
    for partition in clique_partitions(g, max_blocks=min(k, g.n)):
        deadline.check()
        within: list[Edge] = []
        for cls in partition:
            within.extend(itertools.combinations(sorted(cls), 2))
        if is_line_graph(graph_without_edges(g, within)):
            yield partition


# ---------------------------------------------------------------------------
# Bipartite edge-intersection realizability and the 2-color-line gadget
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineBigraphInstance:
    """A bipartite graph with a fixed bipartition; side-local indices.

    Asks: are there two edge-disjoint graphs on one shared vertex set whose
    edges realize the two sides, adjacency = edge intersection?
    """

    nx: int
    ny: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < self.nx and 0 <= j < self.ny):
                raise GraphArgumentError(f"cross edge ({i},{j}) out of range")

    def adjacent(self, i: int, j: int) -> bool:
        return (i, j) in self.edges


LINE_BIGRAPH_MAX_VERTICES = 8


def oracle_line_bigraph(
    b: LineBigraphInstance, budget_secs: float | None = None
) -> tuple[tuple[Edge, ...], tuple[Edge, ...]] | None:
    """Search for disjoint edge sets realizing b as edge intersections.

    Assigns an edge over a shared vertex pool to each side-X vertex, then
    each side-Y vertex; new pool vertices enter in first-use order, which
    prunes relabelings without losing any realization. Edges on one side are
    pairwise distinct and the two sides share no edge.
    """
    if b.nx + b.ny > LINE_BIGRAPH_MAX_VERTICES:
        raise CapabilityError(
            f"line-bigraph search is capped at {LINE_BIGRAPH_MAX_VERTICES} vertices"
        )
    deadline = _Deadline(budget_secs)
    ex: list[Edge] = []
    ey: list[Edge] = []

    def candidates(used: int) -> Iterator[Edge]:
        for u, v in itertools.combinations(range(used), 2):
            yield (u, v)
        for u in range(used):
            yield (u, used)
        yield (used, used + 1)

    def consistent(side: int, idx: int, e: Edge) -> bool:
        own, other = (ex, ey) if side == 0 else (ey, ex)
        if e in own or e in other:
            return False
        for j, f in enumerate(other):
            meets = bool(set(e) & set(f))
            wants = b.adjacent(idx, j) if side == 0 else b.adjacent(j, idx)
            if meets != wants:
                return False
        return True

    def assign(pos: int, used: int) -> bool:
        deadline.check()
        if pos == b.nx + b.ny:
            return True
        side, idx = (0, pos) if pos < b.nx else (1, pos - b.nx)
        own = ex if side == 0 else ey
        for e in candidates(used):
            if consistent(side, idx, e):
                own.append(e)
                if assign(pos + 1, max(used, e[1] + 1)):
                    return True
                own.pop()
        return False

    if assign(0, 0):
        return tuple(ex), tuple(ey)
    return None


def reduce_line_bigraph_to_2cl(b: LineBigraphInstance) -> Graph:
    """The recognition gadget: complete each side to a clique and attach a
    fresh apex to all of side X and another to all of side Y; cross edges are
    kept. X maps to 0..nx-1, Y to nx..nx+ny-1, then apexes x and y."""
    x_apex = b.nx + b.ny
    y_apex = x_apex + 1
    edges: list[Edge] = []
    edges.extend(itertools.combinations(range(b.nx), 2))
    edges.extend(itertools.combinations(range(b.nx, b.nx + b.ny), 2))
    edges.extend((i, b.nx + j) for i, j in b.edges)
    edges.extend((i, x_apex) for i in range(b.nx))
    edges.extend((b.nx + j, y_apex) for j in range(b.ny))
    return Graph(y_apex + 1, edges)
