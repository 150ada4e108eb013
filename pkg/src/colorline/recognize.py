"""Recognition of proper k-color-line graphs with constructive certificates.

The workhorse characterization: G is a proper color-line graph with at most k
colors iff V(G) splits into at most k cliques whose internal edges, once
deleted, leave a line graph. Each accepted graph ships with an edge-colored
root that is re-verified end to end before the certificate is returned;
rejections carry a machine-checkable witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .colored import EdgeColoredGraph, validate_proper
from .core import (
    Edge,
    Graph,
    VertexSet,
    bits,
    bridges,
    complement,
    connected_components,
    find_clique_at_least,
    find_odd_cycle,
    graph_without_edges,
    induced_subgraph,
    is_co_bipartite,
    mask_of,
    maximum_matching,
    set_of,
    sorted_edge,
    universal_vertices,
)
from .errors import GraphArgumentError, InternalContradictionError
from .linegraph import (
    find_induced_embedding,
    is_line_graph,
    recognize_line_graph,
)
from .partitions import clique_partitions


@dataclass(frozen=True)
class Refusal:
    """Why recognition failed, with checkable witness data.

    reason is one of "not_co_bipartite" (witness: odd cycle of the
    complement), "forbidden_subgraph" (witness: (name, embedding)),
    "exhausted_partitions" or "clique_budget_exceeded" (witness: search
    statistics).
    """

    reason: str
    witness: object = None


@dataclass(frozen=True)
class ProperCertificate:
    """Accepting root + correspondence + color classes, or a refusal."""

    root: EdgeColoredGraph | None = None
    vertex_to_edge: tuple[Edge, ...] | None = None
    partition: tuple[VertexSet, ...] | None = None
    refusal: Refusal | None = None

    @property
    def accept(self) -> bool:
        return self.root is not None

    @property
    def k_used(self) -> int | None:
        return self.root.k if self.root is not None else None


def _validate_partition(g: Graph, partition: tuple[VertexSet, ...]) -> None:
    covered = 0
    for cls in partition:
        m = mask_of(cls)
        if not cls:
            raise GraphArgumentError("empty class in vertex partition")
        if m & covered:
            raise GraphArgumentError("vertex classes overlap")
        if any(not 0 <= v < g.n for v in cls):
            raise GraphArgumentError(f"class {sorted(cls)} out of range for n={g.n}")
        if not g.is_clique(m):
            raise GraphArgumentError(f"class {sorted(cls)} is not a clique")
        covered |= m
    if covered != (1 << g.n) - 1:
        raise GraphArgumentError("classes do not cover every vertex")


def _within_class_edges(partition: tuple[VertexSet, ...]) -> list[Edge]:
    out: list[Edge] = []
    for cls in partition:
        out.extend(itertools.combinations(sorted(cls), 2))
    return out


def _certificate_from_partition(
    g: Graph, partition: tuple[VertexSet, ...]
) -> ProperCertificate | None:
    """Build and verify the root for a candidate partition, if the residual
    graph is a line graph."""
    residual = graph_without_edges(g, _within_class_edges(partition))
    if not is_line_graph(residual):
        return None
    cert = recognize_line_graph(residual)
    if not cert.is_line:
        raise InternalContradictionError("line decision and reconstruction disagree")
    root, v2e = cert.root, cert.vertex_to_edge
    class_of = {}
    for i, cls in enumerate(partition, start=1):
        for v in cls:
            class_of[v] = i
    edge_list = root.edges()
    edge_index = {e: i for i, e in enumerate(edge_list)}
    colors = [0] * len(edge_list)
    for v in range(g.n):
        colors[edge_index[v2e[v]]] = class_of[v]
    ecg = EdgeColoredGraph(root, tuple(colors))
    if not validate_proper(ecg):
        raise InternalContradictionError("built root coloring is not proper")
    _verify_certificate(g, ecg, v2e)
    return ProperCertificate(
        root=ecg, vertex_to_edge=v2e, partition=tuple(frozenset(c) for c in partition)
    )


def _verify_certificate(
    g: Graph, root: EdgeColoredGraph, vertex_to_edge: tuple[Edge, ...]
) -> None:
    """Exact color-line replay: adjacency in g must equal incidence-or-color
    of the mapped root edges."""
    edge_index = {e: i for i, e in enumerate(root.graph.edges())}
    for u, v in itertools.combinations(range(g.n), 2):
        eu, ev = vertex_to_edge[u], vertex_to_edge[v]
        incident = len({*eu, *ev}) < 4
        same = root.colors[edge_index[eu]] == root.colors[edge_index[ev]]
        if (incident or same) != g.has_edge(u, v):
            raise InternalContradictionError(
                f"certificate replay failed at vertex pair ({u},{v})"
            )


def check_partition_characterization(
    g: Graph, partition: tuple[VertexSet, ...]
) -> ProperCertificate | None:
    """Certificate for a given vertex clique partition: delete all
    within-class edges, recognize the residual as a line graph, and color the
    root by class; None when the residual is not a line graph."""
    _validate_partition(g, partition)
    return _certificate_from_partition(g, partition)


# ---------------------------------------------------------------------------
# Proper k-color-line recognition (clique peeling + bounded partition search)
# ---------------------------------------------------------------------------


def recognize_proper_k(g: Graph, k: int) -> ProperCertificate:
    """Decide whether g is the color-line graph of some properly edge-colored
    root with at most k colors.

    While fewer than k cliques are peeled and the rest still contains a
    clique on k-s+4 vertices, peel a maximal such clique (it must be a color
    class in any valid partition). The remainder must then fit in
    (k-s)(k-s+3) vertices, and all of its partitions into at most k-s cliques
    are tried, smallest class count first, in restricted-growth order.
    """
    if k < 1:
        raise GraphArgumentError(f"color budget must be at least 1, got {k}")
    peeled: list[VertexSet] = []
    rest = list(range(g.n))
    s = 0
    while s < k:
        sub, order = induced_subgraph(g, rest)
        clique = find_clique_at_least(sub, k - s + 4)
        if clique is None:
            break
        in_g = frozenset(order[v] for v in clique)
        peeled.append(in_g)
        rest = [v for v in rest if v not in in_g]
        s += 1
    bound = (k - s) * (k - s + 3)
    if len(rest) > bound:
        return ProperCertificate(
            refusal=Refusal(
                "clique_budget_exceeded",
                witness={"peeled": s, "residual_vertices": rest, "bound": bound},
            )
        )
    g_peeled = graph_without_edges(g, _within_class_edges(tuple(peeled)))
    tried = 0
    if not rest:
        tried += 1
        cert = _accept_if_line(g, g_peeled, tuple(peeled), ())
        if cert is not None:
            return cert
    else:
        for count in range(1, k - s + 1):
            for tail in clique_partitions(g, rest, exact_blocks=count):
                tried += 1
                cert = _accept_if_line(g, g_peeled, tuple(peeled), tail)
                if cert is not None:
                    return cert
    return ProperCertificate(
        refusal=Refusal(
            "exhausted_partitions", witness={"peeled": s, "partitions_tried": tried}
        )
    )


def _accept_if_line(
    g: Graph,
    g_peeled: Graph,
    peeled: tuple[VertexSet, ...],
    tail: tuple[VertexSet, ...],
) -> ProperCertificate | None:
    residual = graph_without_edges(g_peeled, _within_class_edges(tail))
    if not is_line_graph(residual):
        return None
    return _certificate_from_partition(g, peeled + tail)


# ---------------------------------------------------------------------------
# Proper 2-color-line recognition (linear-procedure shape)
# ---------------------------------------------------------------------------

#: Names and builders for the forbidden induced subgraphs of proper
#: 2-color-line graphs; filled by the fixtures module at import time to keep
#: the graph data in one place.
_FORBIDDEN_2: list[tuple[str, Graph]] = []


def _forbidden_2_catalog() -> list[tuple[str, Graph]]:
    if not _FORBIDDEN_2:
        from .fixtures import proper_2_forbidden

        _FORBIDDEN_2.extend(proper_2_forbidden())
    return _FORBIDDEN_2


def recognize_proper_2(g: Graph) -> ProperCertificate:
    """Decide proper 2-color-line membership by the two-clique procedure.

    Steps: (1) co-bipartite test; (2) set aside the universal vertices U and
    take any clique bipartition (A, B) of the rest; (3) delete the edges
    inside A u U and inside B, and alternatively inside A and inside B u U;
    (4) accept iff one of the two bipartite residuals has maximum degree at
    most two, building the root from its path/cycle components. Co-bipartite
    rejects carry one of the five forbidden induced subgraphs as witness.
    """
    odd = find_odd_cycle(complement(g))
    if odd is not None:
        return ProperCertificate(refusal=Refusal("not_co_bipartite", witness=odd))
    uni = universal_vertices(g)
    rest = [v for v in range(g.n) if v not in uni]
    sub, order = induced_subgraph(g, rest)
    sides = is_co_bipartite(sub)
    if sides is None:
        raise InternalContradictionError("co-bipartite graph lost the property minus U")
    a = frozenset(order[v] for v in sides[0])
    b = frozenset(order[v] for v in sides[1])
    for side1, side2 in ((a | uni, b), (a, b | uni)):
        cert = _try_two_sides(g, side1, side2)
        if cert is not None:
            return cert
    witness = _find_forbidden_2(g)
    if witness is None:
        raise InternalContradictionError(
            "rejected co-bipartite graph without a forbidden subgraph"
        )
    return ProperCertificate(refusal=Refusal("forbidden_subgraph", witness=witness))


def _try_two_sides(
    g: Graph, side1: VertexSet, side2: VertexSet
) -> ProperCertificate | None:
    partition = tuple(s for s in (side1, side2) if s)
    drop = _within_class_edges(partition)
    residual = graph_without_edges(g, drop)
    if any(residual.degree(v) > 2 for v in range(g.n)):
        return None
    root_edges: list[Edge] = []
    edge_of_vertex: dict[int, Edge] = {}
    fresh = itertools.count()
    for comp in connected_components(residual):
        for v, e in _root_component(residual, comp, fresh):
            edge_of_vertex[v] = e
            root_edges.append(e)
    root = Graph(next(fresh), root_edges)
    colors = {
        edge_of_vertex[v]: (1 if v in partition[0] else 2) for v in range(g.n)
    }
    ecg = EdgeColoredGraph.from_color_map(root, colors)
    v2e = tuple(edge_of_vertex[v] for v in range(g.n))
    if not validate_proper(ecg):
        raise InternalContradictionError("two-sided root coloring is not proper")
    _verify_certificate(g, ecg, v2e)
    return ProperCertificate(root=ecg, vertex_to_edge=v2e, partition=partition)


def _root_component(residual: Graph, comp: VertexSet, fresh) -> list[tuple[int, Edge]]:
    """Root edges for one path or even-cycle component of the residual.

    Vertices of a path component v_0..v_{m-1} become the edges of a path on
    m+1 fresh root vertices; an even cycle maps onto a root cycle of the same
    length.
    """
    members = sorted(comp)
    if len(members) == 1:
        v = members[0]
        return [(v, (next(fresh), next(fresh)))]
    degrees = {v: (residual.adj_mask(v) & mask_of(comp)).bit_count() for v in members}
    ends = [v for v in members if degrees[v] == 1]
    walk: list[int] = []
    if ends:
        current, prev = min(ends), -1
    else:
        current, prev = members[0], -1
    while True:
        walk.append(current)
        nxt = [w for w in bits(residual.adj_mask(current)) if w in comp and w != prev]
        if not nxt:
            break
        nxt.sort()
        prev, current = current, nxt[0]
        if current == walk[0]:
            break
    if len(walk) != len(members):
        raise InternalContradictionError("residual component is not a path or cycle")
    out: list[tuple[int, Edge]] = []
    if ends:
        nodes = [next(fresh) for _ in range(len(walk) + 1)]
        for i, v in enumerate(walk):
            out.append((v, sorted_edge(nodes[i], nodes[i + 1])))
    else:
        nodes = [next(fresh) for _ in range(len(walk))]
        for i, v in enumerate(walk):
            out.append((v, sorted_edge(nodes[i], nodes[(i + 1) % len(nodes)])))
    return out


def _find_forbidden_2(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Locate an induced copy of one of the five forbidden graphs, smallest
    (5-vertex, then 7-vertex) first."""
    for name, pattern in _forbidden_2_catalog():
        phi = find_induced_embedding(pattern, g)
        if phi is not None:
            return name, phi
    return None


# ---------------------------------------------------------------------------
# Bridgeless cubic graphs
# ---------------------------------------------------------------------------


def cubic_proper_root(g: Graph) -> ProperCertificate:
    """Proper color-line root for a bridgeless cubic graph: a perfect
    matching gives the color classes and the 2-regular rest is a line graph
    of disjoint cycles."""
    if g.n == 0 or any(g.degree(v) != 3 for v in range(g.n)):
        raise GraphArgumentError("input must be 3-regular")
    if bridges(g):
        raise GraphArgumentError("input must be bridgeless")
    matching = maximum_matching(g)
    if 2 * len(matching) != g.n:
        raise InternalContradictionError(
            "bridgeless cubic graph without a perfect matching: matching bug"
        )
    partition = tuple(frozenset(e) for e in sorted(matching))
    cert = check_partition_characterization(g, partition)
    if cert is None:
        raise InternalContradictionError("2-regular residual failed line recognition")
    return cert
