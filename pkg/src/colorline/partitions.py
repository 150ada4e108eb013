"""Enumeration of vertex partitions into cliques.

Partitions are generated in restricted-growth-string order: each vertex (in
increasing label order) joins an existing block or opens the next one, so the
stream is deterministic and blocks are canonically ordered by their smallest
member. Blocks are pruned to cliques as they grow, which keeps sweeps over
near-complete graphs (hundreds of set partitions) cheap.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .core import Graph, VertexSet, set_of


def clique_partitions(
    g: Graph,
    vertices: Sequence[int] | None = None,
    max_blocks: int | None = None,
    exact_blocks: int | None = None,
) -> Iterator[tuple[VertexSet, ...]]:
    """Yield partitions of ``vertices`` (default: all of g) into cliques.

    ``max_blocks`` bounds the number of classes; ``exact_blocks`` instead
    demands that exact count. With neither, all clique partitions stream out.
    """
    verts = sorted(range(g.n)) if vertices is None else sorted(vertices)
    k = len(verts)
    if k == 0:
        if exact_blocks in (None, 0):
            yield ()
        return
    limit = k if max_blocks is None else min(max_blocks, k)
    if exact_blocks is not None:
        if not 1 <= exact_blocks <= limit:
            return
        limit = exact_blocks
    blocks: list[int] = []

    def extend(i: int) -> Iterator[tuple[VertexSet, ...]]:
        if i == k:
            if exact_blocks is None or len(blocks) == exact_blocks:
                yield tuple(set_of(b) for b in blocks)
            return
        v = verts[i]
        remaining = k - i
        for j, b in enumerate(blocks):
            # v must be adjacent to the whole block for it to stay a clique.
            if b & ~g.adj_mask(v):
                continue
            blocks[j] = b | (1 << v)
            yield from extend(i + 1)
            blocks[j] = b
        if len(blocks) < limit:
            # Opening fewer blocks than exact_blocks demands is a dead end
            # once the remaining vertices cannot make up the difference.
            if exact_blocks is None or len(blocks) + remaining >= exact_blocks:
                blocks.append(1 << v)
                yield from extend(i + 1)
                blocks.pop()

    yield from extend(0)
