"""Simple undirected graphs on integer vertices with bitset adjacency.

Vertices are 0..n-1; each vertex stores its neighborhood as an int bitmask,
so induced subgraphs, clique tests and common-neighborhood queries are a few
word operations. Everything here is immutable and safe to share.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Iterator

from .errors import CapabilityError, GraphArgumentError

#: Hard cap on vertex count. All intended instances are tiny; the cap keeps
#: accidental huge inputs from hitting exponential search paths.
MAX_VERTICES = 64

VertexSet = frozenset[int]
Edge = tuple[int, int]
Matching = frozenset[Edge]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> VertexSet:
    return frozenset(bits(mask))


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph: symmetric, irreflexive adjacency on 0..n-1."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphArgumentError(f"vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise CapabilityError(f"graphs are capped at {MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphArgumentError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_adj_masks(cls, masks: tuple[int, ...]) -> Graph:
        """Trusted fast path: caller guarantees symmetry and no loops."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = masks
        g._edges = None
        return g

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return set_of(self._adj[v])

    def edges(self) -> tuple[Edge, ...]:
        """All edges (u, v) with u < v, in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def is_clique(self, mask: int) -> bool:
        """True iff the vertices of ``mask`` are pairwise adjacent."""
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if rest & ~self._adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self._adj[v]:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())!r})"


# ---------------------------------------------------------------------------
# Small constructors used throughout tests and fixtures
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_minus_edge(n: int, missing: Edge | None = None) -> Graph:
    """K_n minus one edge; by convention the missing edge is (0, n-1)."""
    if missing is None:
        missing = (0, n - 1)
    a, b = min(missing), max(missing)
    return Graph(n, (e for e in itertools.combinations(range(n), 2) if e != (a, b)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return complete_bipartite_graph(1, leaves)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    edges = list(g1.edges()) + [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges)


def graph_without_edges(g: Graph, drop: Iterable[Edge]) -> Graph:
    """Spanning subgraph of ``g`` with the given edges removed."""
    adj = list(g._adj)
    for u, v in drop:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph.from_adj_masks(tuple(adj))


# ---------------------------------------------------------------------------
# Core operations
# ---------------------------------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``.

    Returns the subgraph (vertices relabelled 0..|s|-1 in increasing order of
    their original index) together with the list mapping new index -> old.
    """
    order = sorted(set(vertices))
    for v in order:
        if not 0 <= v < g.n:
            raise GraphArgumentError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(order)}
    masks = []
    for v in order:
        m = 0
        for w in bits(g.adj_mask(v)):
            if w in pos:
                m |= 1 << pos[w]
        masks.append(m)
    return Graph.from_adj_masks(tuple(masks)), order


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adj_masks(tuple((full & ~g.adj_mask(v)) & ~(1 << v) for v in range(g.n)))


def connected_components(g: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj_mask(u)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(set_of(comp))
    return comps


def two_coloring(g: Graph) -> tuple[int, int] | None:
    """2-color ``g`` per component (BFS; the component's smallest vertex gets
    color 0). Returns the two color classes as masks, or None if some edge
    joins equal colors."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj_mask(v)):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = mask_of(v for v in range(g.n) if color[v] == 0)
    side1 = mask_of(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """Vertices of some odd cycle of ``g``, or None if bipartite."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj_mask(v)):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    # Join the two tree paths at their lowest common ancestor.
                    pv = []
                    x = v
                    while x != -1:
                        pv.append(x)
                        x = parent[x]
                    seen = set(pv)
                    pw = []
                    x = w
                    while x not in seen:
                        pw.append(x)
                        x = parent[x]
                    cycle = pv[: pv.index(x) + 1] + pw[::-1]
                    assert len(cycle) % 2 == 1
                    return tuple(cycle)
    return None


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_co_bipartite(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Partition V into two cliques (A, B), or None.

    A partition exists iff the complement is bipartite; A collects, per
    complement component, the color class of the component's smallest vertex.
    """
    coloring = two_coloring(complement(g))
    if coloring is None:
        return None
    side0, _ = coloring
    return set_of(side0), set_of(((1 << g.n) - 1) & ~side0)


def universal_vertices(g: Graph) -> VertexSet:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def find_clique_at_least(g: Graph, q: int) -> VertexSet | None:
    """A maximal clique containing the lexicographically least q-clique.

    Scans q-subsets in lexicographic order (vertices of degree < q-1 cannot
    participate and are skipped), then greedily extends by the smallest
    admissible vertex, so the result is deterministic and maximal.
    """
    if q < 1:
        raise GraphArgumentError(f"clique size must be at least 1, got {q}")
    eligible = [v for v in range(g.n) if g.degree(v) >= q - 1]
    for combo in itertools.combinations(eligible, q):
        if g.is_clique(mask_of(combo)):
            clique = mask_of(combo)
            common = (1 << g.n) - 1
            for v in combo:
                common &= g.adj_mask(v)
            common &= ~clique
            while common:
                v = (common & -common).bit_length() - 1
                clique |= 1 << v
                common &= g.adj_mask(v)
            return set_of(clique)
    return None


def sorted_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossom
    contraction (classic O(V^3) scheme). Deterministic given the labeling."""
    n = g.n
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    neighbors = [list(bits(g.adj_mask(v))) for v in range(n)]

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in neighbors[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # Augment along the alternating path back to the root.
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)
    return frozenset(sorted_edge(v, match[v]) for v in range(n) if match[v] > v)


#: are_isomorphic is meant for certificate replay at oracle scale only.
ISOMORPHISM_MAX_VERTICES = 16


def _refine_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighbor-color refinement (1-dimensional WL)."""
    colors: tuple[int, ...] = tuple(g.degree(v) for v in range(g.n))
    for _ in range(g.n):
        sig = [(colors[v], tuple(sorted(colors[w] for w in bits(g.adj_mask(v))))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(palette[s] for s in sig)
        if new == colors:
            break
        colors = new
    return colors


def are_isomorphic(g1: Graph, g2: Graph) -> list[int] | None:
    """A vertex bijection phi with adj(u,v) <=> adj(phi u, phi v), or None.

    Backtracking over degree/refinement classes; intended for graphs up to
    ISOMORPHISM_MAX_VERTICES vertices.
    """
    if g1.n > ISOMORPHISM_MAX_VERTICES or g2.n > ISOMORPHISM_MAX_VERTICES:
        raise CapabilityError(
            f"isomorphism search is capped at {ISOMORPHISM_MAX_VERTICES} vertices"
        )
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None
    candidates = [[w for w in range(n) if c2[w] == c1[v]] for v in range(n)]
    # Most-constrained vertices first keeps the search shallow.
    order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    phi = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g1.has_edge(v, u) != g2.has_edge(w, phi[u]):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                phi[v] = -1
                used[w] = False
        return False

    return phi if backtrack(0) else None


ENUMERATION_MAX_VERTICES = 7


def pair_order(n: int) -> list[Edge]:
    """Vertex pairs in lexicographic order; bit i of an edge mask is pair i."""
    return list(itertools.combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int, pairs: list[Edge] | None = None) -> Graph:
    if pairs is None:
        pairs = pair_order(n)
    adj = [0] * n
    for i in range(mask.bit_length()):
        if mask >> i & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_adj_masks(tuple(adj))


def edge_mask_of(g: Graph, pairs: list[Edge] | None = None) -> int:
    if pairs is None:
        pairs = pair_order(g.n)
    mask = 0
    for i, (u, v) in enumerate(pairs):
        if g.has_edge(u, v):
            mask |= 1 << i
    return mask


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on n vertices, in edge-mask order."""
    if n > ENUMERATION_MAX_VERTICES:
        raise CapabilityError(
            f"labeled-graph enumeration is capped at {ENUMERATION_MAX_VERTICES} vertices"
        )
    pairs = pair_order(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_mask(n, mask, pairs)


def bridges(g: Graph) -> list[Edge]:
    """Cut edges of ``g`` (iterative DFS lowpoint computation)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(list(bits(g.adj_mask(root)))))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent_v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(list(bits(g.adj_mask(w))))))
                    advanced = True
                    break
                if w != parent_v:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.append(sorted_edge(pv, v))
    return out
