"""Line-graph recognition with constructive root reconstruction.

Recognition runs a forbidden-induced-subgraph scan over the nine-graph
catalog first (refusals carry an embedding), then reconstructs a root per
component by searching for an edge clique partition in which every vertex
lies in at most two cliques. The partition search is exact backtracking:
worst-case exponential only on non-line inputs, which the catalog scan has
already cut off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Edge,
    Graph,
    VertexSet,
    bits,
    connected_components,
    mask_of,
    set_of,
    sorted_edge,
    two_coloring,
)
from .errors import GraphArgumentError, InternalContradictionError
from .formats import graph6_decode

#: The nine minimal forbidden induced subgraphs for line graphs, transcribed
#: as graph6. Index 1 is the claw (center at vertex 0); indices 2..9 are
#: claw-free. The transcription itself is covered by tests: none of the nine
#: is a line graph, while all their one-vertex-deleted subgraphs are.
BEINEKE_GRAPH6: tuple[str, ...] = (
    "Cs",
    "Dxs",
    "ExBG",
    "ExFG",
    "Dz{",
    "EwNg",
    "ExNw",
    "EpNg",
    "Ehfw",
)


@lru_cache(maxsize=1)
def beineke_catalog() -> tuple[Graph, ...]:
    return tuple(graph6_decode(s) for s in BEINEKE_GRAPH6)


def find_induced_embedding(pattern: Graph, host: Graph) -> tuple[int, ...] | None:
    """First (deterministic) induced embedding of pattern into host, as the
    tuple phi with phi[pattern vertex] = host vertex; None if there is none."""
    if pattern.n > host.n or pattern.m > host.m:
        return None
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    host_degs = [host.degree(w) for w in range(host.n)]
    phi = [-1] * pattern.n
    used = [False] * host.n

    def backtrack(i: int) -> bool:
        if i == pattern.n:
            return True
        a = order[i]
        deg_a = pattern.degree(a)
        for w in range(host.n):
            if used[w] or host_degs[w] < deg_a:
                continue
            ok = True
            for j in range(i):
                b = order[j]
                if pattern.has_edge(a, b) != host.has_edge(w, phi[b]):
                    ok = False
                    break
            if ok:
                phi[a] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                phi[a] = -1
                used[w] = False
        return False

    return tuple(phi) if backtrack(0) else None


def beineke_violation(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Smallest catalog index (1..9) embedding induced in g, with the
    embedding; None iff g is a line graph by the forbidden-subgraph test."""
    for idx, pattern in enumerate(beineke_catalog(), start=1):
        phi = find_induced_embedding(pattern, g)
        if phi is not None:
            return idx, phi
    return None


def _claw_free(g: Graph) -> bool:
    for v in range(g.n):
        nbrs = list(bits(g.adj_mask(v)))
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


# ---------------------------------------------------------------------------
# Krausz edge clique partitions
# ---------------------------------------------------------------------------


def is_valid_krausz_partition(g: Graph, cliques: tuple[VertexSet, ...]) -> bool:
    """Every edge of g in exactly one member, every vertex in at most two."""
    edge_count: dict[Edge, int] = {}
    vertex_count = [0] * g.n
    for c in cliques:
        cm = mask_of(c)
        if not g.is_clique(cm):
            return False
        for v in c:
            vertex_count[v] += 1
        for e in itertools.combinations(sorted(c), 2):
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(cnt > 2 for cnt in vertex_count):
        return False
    return all(edge_count.get(e, 0) == 1 for e in g.edges()) and all(
        g.has_edge(u, v) for (u, v) in edge_count
    )


def _krausz_backtrack(g: Graph, comp: int) -> list[int] | None:
    """Partition the edges inside vertex mask ``comp`` into cliques with every
    vertex in at most two, by exact backtracking. Returns clique masks."""
    edges = [(u, v) for (u, v) in g.edges() if comp >> u & 1 and comp >> v & 1]
    index = {e: i for i, e in enumerate(edges)}
    covered = [False] * len(edges)
    membership = [0] * g.n
    cliques: list[int] = []

    def all_edges_covered_at(w: int) -> bool:
        return all(
            covered[index[sorted_edge(w, x)]] for x in bits(g.adj_mask(w) & comp)
        )

    def search(start: int) -> bool:
        nxt = start
        while nxt < len(edges) and covered[nxt]:
            nxt += 1
        if nxt == len(edges):
            return True
        u, v = edges[nxt]
        if membership[u] >= 2 or membership[v] >= 2:
            return False
        admissible = [
            w
            for w in bits(g.adj_mask(u) & g.adj_mask(v) & comp)
            if membership[w] < 2
            and not covered[index[sorted_edge(u, w)]]
            and not covered[index[sorted_edge(v, w)]]
        ]
        for size in range(len(admissible), -1, -1):
            for extra in itertools.combinations(admissible, size):
                pairs = [sorted_edge(a, b) for a, b in itertools.combinations(extra, 2)]
                if any(not g.has_edge(a, b) for a, b in pairs):
                    continue
                if any(covered[index[p]] for p in pairs):
                    continue
                members = (u, v) + extra
                new_pairs = [(u, v)]
                new_pairs += [sorted_edge(u, w) for w in extra]
                new_pairs += [sorted_edge(v, w) for w in extra]
                new_pairs += pairs
                for p in new_pairs:
                    covered[index[p]] = True
                for w in members:
                    membership[w] += 1
                # A vertex whose two clique slots are spent must be done.
                if all(membership[w] < 2 or all_edges_covered_at(w) for w in members):
                    cliques.append(mask_of(members))
                    if search(nxt + 1):
                        return True
                    cliques.pop()
                for p in new_pairs:
                    covered[index[p]] = False
                for w in members:
                    membership[w] -= 1
        return False

    return cliques.copy() if search(0) else None


def root_from_krausz_partition(
    g: Graph, cliques: list[int]
) -> tuple[Graph, tuple[Edge, ...]]:
    """Build a root graph from an edge clique partition of g.

    Root vertices are the cliques plus a fresh pendant vertex for every
    missing clique slot; the root edge of G-vertex v joins the (up to two)
    cliques containing v. G-vertices in no clique become isolated root edges.
    """
    memberships: list[list[int]] = [[] for _ in range(g.n)]
    for ci, cm in enumerate(cliques):
        for v in bits(cm):
            memberships[v].append(ci)
    next_vertex = len(cliques)
    root_edges: list[Edge] = []
    vertex_to_edge: list[Edge] = []
    for v in range(g.n):
        slots = memberships[v]
        if len(slots) > 2:
            raise InternalContradictionError(f"vertex {v} lies in {len(slots)} cliques")
        while len(slots) < 2:
            slots = slots + [next_vertex]
            next_vertex += 1
        e = sorted_edge(slots[0], slots[1])
        vertex_to_edge.append(e)
        root_edges.append(e)
    if len(set(root_edges)) != len(root_edges):
        raise InternalContradictionError("two vertices share the same clique pair")
    return Graph(next_vertex, root_edges), tuple(vertex_to_edge)


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineCertificate:
    """Root with the vertex<->edge correspondence, or a refusal embedding."""

    root: Graph | None
    vertex_to_edge: tuple[Edge, ...] | None
    violation: tuple[int, tuple[int, ...]] | None

    @property
    def is_line(self) -> bool:
        return self.root is not None


def _component_cliques(g: Graph, comp_mask: int) -> list[int] | None:
    size = comp_mask.bit_count()
    if size == 1:
        return []
    # A triangle component has two valid readings; fix the single-clique one
    # so the root is the star K_{1,3} (the root vertex count is maximal).
    if size == 3 and g.is_clique(comp_mask):
        return [comp_mask]
    return _krausz_backtrack(g, comp_mask)


def recognize_line_graph(g: Graph) -> LineCertificate:
    """Recognize g as a line graph, returning a root plus correspondence, or
    a refusal carrying a verified forbidden-subgraph embedding."""
    violation = beineke_violation(g)
    if violation is not None:
        return LineCertificate(root=None, vertex_to_edge=None, violation=violation)
    cliques: list[int] = []
    for comp in connected_components(g):
        found = _component_cliques(g, mask_of(comp))
        if found is None:
            raise InternalContradictionError(
                "catalog scan passed but no edge clique partition exists"
            )
        cliques.extend(found)
    root, vertex_to_edge = root_from_krausz_partition(g, cliques)
    _verify_line_correspondence(g, root, vertex_to_edge)
    return LineCertificate(root=root, vertex_to_edge=vertex_to_edge, violation=None)


def _verify_line_correspondence(
    g: Graph, root: Graph, vertex_to_edge: tuple[Edge, ...]
) -> None:
    if len(set(vertex_to_edge)) != g.n or set(vertex_to_edge) != set(root.edges()):
        raise InternalContradictionError("vertex<->edge map is not a bijection")
    for u, v in itertools.combinations(range(g.n), 2):
        incident = len(set(vertex_to_edge[u]) | set(vertex_to_edge[v])) < 4
        if incident != g.has_edge(u, v):
            raise InternalContradictionError(
                f"reconstructed root mismatches input at pair ({u},{v})"
            )


@lru_cache(maxsize=1 << 20)
def is_line_graph(g: Graph) -> bool:
    """Decision-only variant (no certificate), cached for oracle sweeps.

    Runs the reconstruction search directly, with a claw prefilter; it does
    not consult the forbidden-subgraph catalog, so catalog tests can use it
    as an independent check.
    """
    if not _claw_free(g):
        return False
    for comp in connected_components(g):
        if _component_cliques(g, mask_of(comp)) is None:
            return False
    return True


def krausz_partition(g: Graph) -> tuple[VertexSet, ...] | None:
    """A Krausz partition of g (every edge in exactly one clique, every
    vertex in at most two), extracted from a recognized root; None when g is
    not a line graph.

    The cliques are the incident-edge sets of the root vertices of degree at
    least two; singleton sets are dropped, and edge coverage stays exact
    because each edge of g comes from a unique shared root vertex.
    """
    cert = recognize_line_graph(g)
    if not cert.is_line:
        return None
    root, v2e = cert.root, cert.vertex_to_edge
    at_root_vertex: dict[int, set[int]] = {}
    for gv, (a, b) in enumerate(v2e):
        at_root_vertex.setdefault(a, set()).add(gv)
        at_root_vertex.setdefault(b, set()).add(gv)
    cliques = tuple(
        frozenset(vs) for w, vs in sorted(at_root_vertex.items()) if len(vs) >= 2
    )
    if not is_valid_krausz_partition(g, cliques):
        raise InternalContradictionError("extracted partition violates Krausz conditions")
    return cliques


def is_line_graph_bipartite_fast(g: Graph) -> bool:
    """For bipartite g only: line graph iff maximum degree is at most two
    (components are then paths or even cycles)."""
    if two_coloring(g) is None:
        raise GraphArgumentError("input must be bipartite")
    return all(g.degree(v) <= 2 for v in range(g.n))
