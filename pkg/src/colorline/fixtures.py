"""Named graph fixtures used by the recognizers, oracles and tests.

Includes the nine forbidden subgraphs for line graphs, the five forbidden
subgraphs for proper 2-color-line graphs (two triangles joined to a common
apex with 0..3 rungs, plus K5-e), a worked 9-vertex color-line example with
its 3-colored root, a subcubic graph that is not a color-line graph, and the
small bridgeless cubic family.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .colored import EdgeColoredGraph
from .core import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    complete_minus_edge,
    cycle_graph,
    path_graph,
    star_graph,
)
from .errors import GraphArgumentError
from .linegraph import beineke_catalog


def _two_triangle_apex(rungs: int) -> Graph:
    """Triangles {0,1,2} and {3,4,5}, apex 6 joined to all six, plus
    ``rungs`` edges (2,5), (1,4), (0,3) in that order."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    edges += [(v, 6) for v in range(6)]
    edges += [(2, 5), (1, 4), (0, 3)][:rungs]
    return Graph(7, edges)


def twin_hub_graph() -> Graph:
    """9-vertex color-line example: a K5 core {1..5}, two hubs 0 and 6 joined
    to the core, and two satellites 7, 8 joined to both hubs. The edge set is
    the union of the cliques {0..5}, {1..6}, {0,7}, {0,8}, {6,7}, {6,8}."""
    cliques = [range(0, 6), range(1, 7), (0, 7), (0, 8), (6, 7), (6, 8)]
    edges = set()
    for c in cliques:
        edges.update(itertools.combinations(sorted(c), 2))
    return Graph(9, edges)


def twin_hub_root() -> EdgeColoredGraph:
    """3-colored 10-vertex root of the twin-hub graph: a 5-star at vertex 5
    and the tail 5-6-7-8-9, with classes {the star edges, (7,8)}, {(5,6),
    (8,9)} and {(6,7)}. The coloring is deliberately not proper."""
    coloring = {
        (0, 5): 1,
        (1, 5): 1,
        (2, 5): 1,
        (3, 5): 1,
        (4, 5): 1,
        (7, 8): 1,
        (5, 6): 2,
        (8, 9): 2,
        (6, 7): 3,
    }
    return EdgeColoredGraph.from_color_map(Graph(10, coloring.keys()), coloring)


def twin_hub_vertex_of_root_edge() -> dict[tuple[int, int], int]:
    """Intended correspondence root edge -> twin-hub vertex."""
    return {
        (0, 5): 5,
        (1, 5): 4,
        (2, 5): 3,
        (3, 5): 2,
        (4, 5): 1,
        (5, 6): 0,
        (6, 7): 8,
        (7, 8): 6,
        (8, 9): 7,
    }


def subcubic_non_color_line() -> Graph:
    """A subcubic graph that is not a color-line graph: two 9-vertex gadgets
    (nested squares with a hooked center) bridged by one extra vertex.

    Too large for the exhaustive oracles; shipped as data with an opt-in
    long-running check only.
    """

    def gadget(o: int) -> list[tuple[int, int]]:
        square = [(o + 0, o + 1), (o + 1, o + 2), (o + 2, o + 3), (o + 0, o + 3)]
        inner = [(o + 4, o + 5), (o + 5, o + 6), (o + 6, o + 7), (o + 4, o + 7)]
        hooks = [(o + 1, o + 5), (o + 3, o + 7), (o + 4, o + 8), (o + 6, o + 8), (o + 2, o + 8)]
        return square + inner + hooks

    edges = gadget(0) + gadget(9) + [(0, 18), (9, 18)]
    return Graph(19, edges)


def prism_graph() -> Graph:
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def co_matching_graph(pairs: int = 6) -> Graph:
    """Complement of a perfect matching on 2*pairs vertices (co-bipartite,
    claw-free; at six pairs it is not a color-line graph)."""
    n = 2 * pairs
    matching = {(2 * i, 2 * i + 1) for i in range(pairs)}
    return Graph(n, (e for e in itertools.combinations(range(n), 2) if e not in matching))


def proper_2_forbidden() -> list[tuple[str, Graph]]:
    """The five forbidden induced subgraphs for proper 2-color-line graphs,
    smallest first."""
    return [
        ("K5-e", complete_minus_edge(5)),
        ("F1", _two_triangle_apex(0)),
        ("F2", _two_triangle_apex(1)),
        ("F3", _two_triangle_apex(2)),
        ("F4", _two_triangle_apex(3)),
    ]


@lru_cache(maxsize=1)
def catalog() -> dict[str, Graph | EdgeColoredGraph]:
    named: dict[str, Graph | EdgeColoredGraph] = {
        "claw": star_graph(3),
        "k1_4": star_graph(4),
        "k4": complete_graph(4),
        "k5_e": complete_minus_edge(5),
        "k6_e": complete_minus_edge(6),
        "k7_e": complete_minus_edge(7),
        "f1": _two_triangle_apex(0),
        "f2": _two_triangle_apex(1),
        "f3": _two_triangle_apex(2),
        "f4": _two_triangle_apex(3),
        "twin_hub": twin_hub_graph(),
        "twin_hub_root": twin_hub_root(),
        "subcubic_non_color_line": subcubic_non_color_line(),
        "co_6k2": co_matching_graph(6),
        "k33": complete_bipartite_graph(3, 3),
        "prism": prism_graph(),
        "petersen": petersen_graph(),
        "p4": path_graph(4),
        "c4": cycle_graph(4),
        "c5": cycle_graph(5),
        "c6": cycle_graph(6),
    }
    for i, g in enumerate(beineke_catalog(), start=1):
        named[f"beineke_{i}"] = g
    _check_counts(named)
    return named


def _check_counts(named: dict[str, Graph | EdgeColoredGraph]) -> None:
    expected = {
        "f1": (7, 12),
        "f2": (7, 13),
        "f3": (7, 14),
        "f4": (7, 15),
        "twin_hub": (9, 24),
        "subcubic_non_color_line": (19, 28),
        "co_6k2": (12, 60),
        "petersen": (10, 15),
    }
    for name, (n, m) in expected.items():
        g = named[name]
        assert isinstance(g, Graph) and (g.n, g.m) == (n, m), name


def fixture(name: str) -> Graph | EdgeColoredGraph:
    graphs = catalog()
    if name not in graphs:
        raise GraphArgumentError(
            f"unknown fixture {name!r}; known: {', '.join(sorted(graphs))}"
        )
    return graphs[name]


def fixture_names() -> list[str]:
    return sorted(catalog())


def bridgeless_cubic_fixtures() -> dict[str, Graph]:
    return {
        "k4": complete_graph(4),
        "k33": complete_bipartite_graph(3, 3),
        "prism": prism_graph(),
        "petersen": petersen_graph(),
    }
