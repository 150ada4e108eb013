"""Shared brute-force helpers kept independent of the library's search code."""

from __future__ import annotations

import itertools

from colorline.core import Graph


def brute_max_matching_size(g: Graph) -> int:
    """Maximum matching size by scanning edge subsets, largest first."""
    edges = g.edges()
    for r in range(len(edges), 0, -1):
        for combo in itertools.combinations(edges, r):
            seen: set[int] = set()
            ok = True
            for u, v in combo:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                return r
    return 0


def brute_is_clique(g: Graph, vertices) -> bool:
    return all(g.has_edge(u, v) for u, v in itertools.combinations(sorted(vertices), 2))


def brute_induced_edges(g: Graph, vertices) -> int:
    return sum(1 for u, v in itertools.combinations(sorted(vertices), 2) if g.has_edge(u, v))


def graphs_equal_as_sets(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and set(g1.edges()) == set(g2.edges())
