"""Clique-family certificates for color-line graphs.

A graph is a color-line graph exactly when it carries a family of cliques in
which every vertex lies in at most three members and every edge in one or
two, together with consistent assignments Q_e / Q_v for the doubly-covered
edges F and triply-covered vertices W: each x in F u W lies in its assigned
clique, and any two assigned cliques are equal or disjoint, matching on
membership. The proper variant forces F empty (every edge in exactly one
member). Both checks are constructive: a passing family yields an
edge-colored root whose color-line graph is the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from collections.abc import Mapping

from .colored import EdgeColoredGraph
from .core import Edge, Graph, VertexSet, graph_without_edges, mask_of, sorted_edge
from .errors import GraphArgumentError, InternalContradictionError
from .linegraph import is_valid_krausz_partition, root_from_krausz_partition


@dataclass(frozen=True)
class KrauszFamily:
    """A family of cliques plus the Q_e / Q_v assignments.

    ``map_f`` sends each doubly-covered edge to a clique index, ``map_w``
    each triply-covered vertex. The F/W domains themselves are recomputed
    from the cliques against a concrete graph during checking.
    """

    cliques: tuple[VertexSet, ...]
    map_f: Mapping[Edge, int] = field(default_factory=dict)
    map_w: Mapping[int, int] = field(default_factory=dict)


def _validate_cliques(g: Graph, fam: KrauszFamily) -> None:
    seen = set()
    for c in fam.cliques:
        if not c:
            raise GraphArgumentError("empty set listed in clique family")
        if any(not 0 <= v < g.n for v in c):
            raise GraphArgumentError(f"clique {sorted(c)} out of range for n={g.n}")
        if not g.is_clique(mask_of(c)):
            raise GraphArgumentError(f"listed set {sorted(c)} is not a clique")
        if c in seen:
            raise GraphArgumentError(f"clique {sorted(c)} listed twice")
        seen.add(c)
    for idx in itertools.chain(fam.map_f.values(), fam.map_w.values()):
        if not 0 <= idx < len(fam.cliques):
            raise GraphArgumentError(f"mapping points at missing clique {idx}")


def multiplicity_sets(g: Graph, cliques: tuple[VertexSet, ...]) -> tuple[set[Edge], set[int]]:
    """(F, W): edges in exactly two members, vertices in exactly three."""
    edge_count: dict[Edge, int] = {}
    vertex_count = [0] * g.n
    for c in cliques:
        for v in c:
            vertex_count[v] += 1
        for e in itertools.combinations(sorted(c), 2):
            edge_count[e] = edge_count.get(e, 0) + 1
    f = {e for e, cnt in edge_count.items() if cnt == 2}
    w = {v for v in range(g.n) if vertex_count[v] == 3}
    return f, w


def _edge_in_clique(e: Edge, clique: VertexSet) -> bool:
    return e[0] in clique and e[1] in clique


def _check_family(g: Graph, fam: KrauszFamily, proper: bool) -> tuple[bool, str | None]:
    _validate_cliques(g, fam)
    edge_count: dict[Edge, int] = {}
    vertex_count = [0] * g.n
    for c in fam.cliques:
        for v in c:
            vertex_count[v] += 1
        for e in itertools.combinations(sorted(c), 2):
            edge_count[e] = edge_count.get(e, 0) + 1

    # (a) membership bounds; edge coverage is exactly-one in the proper case.
    if any(cnt > 3 for cnt in vertex_count):
        return False, "a"
    hi = 1 if proper else 2
    if any(not 1 <= edge_count.get(e, 0) <= hi for e in g.edges()):
        return False, "a"

    f = {e for e, cnt in edge_count.items() if cnt == 2}
    w = {v for v in range(g.n) if vertex_count[v] == 3}
    if set(fam.map_f) - f or set(fam.map_w) - w:
        raise GraphArgumentError("mapping keys outside the F / W sets")

    # (b1) every x in F u W is assigned a clique it belongs to.
    assigned: list[tuple[object, VertexSet]] = []
    for e in sorted(f):
        if e not in fam.map_f:
            return False, "b1"
        q = fam.cliques[fam.map_f[e]]
        if not _edge_in_clique(e, q):
            return False, "b1"
        assigned.append((e, q))
    for v in sorted(w):
        if v not in fam.map_w:
            return False, "b1"
        q = fam.cliques[fam.map_w[v]]
        if v not in q:
            return False, "b1"
        assigned.append((v, q))

    # (b2) assigned cliques agree on membership: equal when one contains the
    # other's element, disjoint otherwise.
    for (x, qx), (y, qy) in itertools.permutations(assigned, 2):
        x_in_qy = _edge_in_clique(x, qy) if isinstance(x, tuple) else x in qy
        if x_in_qy:
            if qx != qy:
                return False, "b2"
        elif qx & qy:
            return False, "b2"
    return True, None


def check_krausz_color(g: Graph, fam: KrauszFamily) -> tuple[bool, str | None]:
    """Check the color-line clique-family conditions; on failure the tag
    names the first violated clause among "a", "b1", "b2"."""
    return _check_family(g, fam, proper=False)


def check_krausz_proper(g: Graph, fam: KrauszFamily) -> tuple[bool, str | None]:
    """Proper variant: every edge must lie in exactly one member, so F is
    empty and only the W mapping is checked."""
    return _check_family(g, fam, proper=True)


def find_mappings(
    g: Graph, cliques: tuple[VertexSet, ...], proper: bool = False
) -> KrauszFamily | None:
    """Search for Q_e / Q_v assignments making the family pass; None if no
    assignment exists (or the membership bounds already fail)."""
    fam0 = KrauszFamily(cliques)
    _validate_cliques(g, fam0)
    f, w = multiplicity_sets(g, cliques)
    if proper and f:
        return None
    items: list[object] = sorted(f) + sorted(w)
    options: list[list[int]] = []
    for x in items:
        if isinstance(x, tuple):
            opts = [i for i, c in enumerate(cliques) if _edge_in_clique(x, c)]
        else:
            opts = [i for i, c in enumerate(cliques) if x in c]
        options.append(opts)
    chosen: list[int] = []

    def consistent(i: int) -> bool:
        x, qx = items[i], cliques[chosen[i]]
        for j in range(i):
            y, qy = items[j], cliques[chosen[j]]
            x_in_qy = _edge_in_clique(x, qy) if isinstance(x, tuple) else x in qy
            y_in_qx = _edge_in_clique(y, qx) if isinstance(y, tuple) else y in qx
            if (x_in_qy or y_in_qx) and qx != qy:
                return False
            if not (x_in_qy or y_in_qx) and qx & qy:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(items):
            return True
        for opt in options[i]:
            chosen.append(opt)
            if consistent(i) and search(i + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        return None
    map_f = {e: chosen[i] for i, e in enumerate(items) if isinstance(e, tuple)}
    map_w = {v: chosen[i] for i, v in enumerate(items) if isinstance(v, int)}
    fam = KrauszFamily(cliques, map_f, map_w)
    ok, _ = _check_family(g, fam, proper)
    return fam if ok else None


def build_root_from_krausz(
    g: Graph, fam: KrauszFamily
) -> tuple[EdgeColoredGraph, tuple[Edge, ...]]:
    """Construct an edge-colored root H with color-line graph g from a
    passing family.

    Edges covered only by an assigned clique Q_x are removed; the surviving
    family is then a plain Krausz partition of the reduced graph, whose line
    root is H. Each distinct Q_x becomes one color class; every other root
    edge gets a fresh color. Returns the root and the G-vertex -> root-edge
    map; the color-line identity is re-verified before returning.
    """
    ok, tag = check_krausz_color(g, fam)
    if not ok:
        raise GraphArgumentError(f"family violates condition ({tag})")
    class_indices = sorted(set(fam.map_f.values()) | set(fam.map_w.values()))
    class_set = set(class_indices)

    edge_members: dict[Edge, list[int]] = {}
    for i, c in enumerate(fam.cliques):
        for e in itertools.combinations(sorted(c), 2):
            edge_members.setdefault(e, []).append(i)
    drop = [
        e
        for e, members in edge_members.items()
        if len(members) == 1 and members[0] in class_set
    ]
    reduced = graph_without_edges(g, drop)
    survivors = tuple(c for i, c in enumerate(fam.cliques) if i not in class_set)
    if not is_valid_krausz_partition(reduced, survivors):
        raise InternalContradictionError(
            "family passed the checks but the reduced family is not a Krausz partition"
        )
    root, vertex_to_edge = root_from_krausz_partition(
        reduced, [mask_of(c) for c in survivors]
    )

    color_of_vertex: dict[int, int] = {}
    for color, i in enumerate(class_indices, start=1):
        for v in fam.cliques[i]:
            color_of_vertex[v] = color
    next_color = len(class_indices) + 1
    coloring: dict[Edge, int] = {}
    vertex_of_edge = {e: v for v, e in enumerate(vertex_to_edge)}
    for e in root.edges():
        v = vertex_of_edge[e]
        if v in color_of_vertex:
            coloring[e] = color_of_vertex[v]
        else:
            coloring[e] = next_color
            next_color += 1
    ecg = EdgeColoredGraph.from_color_map(root, coloring)
    _verify_color_line_correspondence(g, ecg, vertex_to_edge)
    return ecg, vertex_to_edge


def _verify_color_line_correspondence(
    g: Graph, root: EdgeColoredGraph, vertex_to_edge: tuple[Edge, ...]
) -> None:
    """Exact check that the color-line graph of root is g under the map."""
    edge_index = {e: i for i, e in enumerate(root.graph.edges())}
    if sorted(vertex_to_edge) != sorted(edge_index) or len(vertex_to_edge) != g.n:
        raise InternalContradictionError("vertex<->edge map is not a bijection")
    for u, v in itertools.combinations(range(g.n), 2):
        eu, ev = vertex_to_edge[u], vertex_to_edge[v]
        incident = len({*eu, *ev}) < 4
        same_color = root.colors[edge_index[eu]] == root.colors[edge_index[ev]]
        if (incident or same_color) != g.has_edge(u, v):
            raise InternalContradictionError(
                f"color-line graph of built root mismatches input at ({u},{v})"
            )
