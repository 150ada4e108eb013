"""Text formats: edge lists, colored edge lists, and graph6.

Edge list: first line "n m", then m lines "u v" (0-based). Colored edge
list: first line "n m k", then m lines "u v c" with 1 <= c <= k. Blank lines
and "#" comments are ignored in both. graph6 is the standard 6-bit encoding,
used for fixture exchange.
"""

from __future__ import annotations

import warnings

from .colored import EdgeColoredGraph
from .core import Graph, sorted_edge
from .errors import ParseError


class DuplicateEdgeWarning(UserWarning):
    """Emitted when an input edge list repeats an edge; duplicates collapse."""


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _parse_header(line: str, lineno: int, fields: int) -> list[int]:
    parts = line.split()
    if len(parts) != fields:
        raise ParseError(f"expected {fields} header fields, got {line!r}", lineno)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer header field in {line!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError(f"negative header field in {line!r}", lineno)
    return values


def _parse_endpoints(parts: list[str], n: int, lineno: int) -> tuple[int, int]:
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer vertex in {' '.join(parts)!r}", lineno) from None
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", lineno)
    return sorted_edge(u, v)


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", None)
    lineno, header = lines[0]
    n, m = _parse_header(header, lineno, 2)
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}", lineno)
    edges = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        e = _parse_endpoints(parts, n, lineno)
        if e in edges:
            warnings.warn(f"duplicate edge {e} collapsed", DuplicateEdgeWarning, stacklevel=2)
        edges.add(e)
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_colored_edge_list(text: str) -> EdgeColoredGraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", None)
    lineno, header = lines[0]
    n, m, k = _parse_header(header, lineno, 3)
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}", lineno)
    coloring = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", lineno)
        e = _parse_endpoints(parts[:2], n, lineno)
        try:
            c = int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer color in {line!r}", lineno) from None
        if not 1 <= c <= k:
            raise ParseError(f"color {c} outside 1..{k}", lineno)
        if e in coloring:
            if coloring[e] != c:
                raise ParseError(f"edge {e} repeated with conflicting colors", lineno)
            warnings.warn(f"duplicate edge {e} collapsed", DuplicateEdgeWarning, stacklevel=2)
        coloring[e] = c
    return EdgeColoredGraph.from_color_map(Graph(n, coloring.keys()), coloring)


def serialize_colored_edge_list(h: EdgeColoredGraph) -> str:
    lines = [f"{h.graph.n} {h.graph.m} {h.k}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in zip(h.graph.edges(), h.colors))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise ParseError("graph6 support here covers n <= 62 only", None)
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string", None)
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise ParseError("invalid graph6 character", None)
    if codes[0] == 63:
        raise ParseError("graph6 support here covers n <= 62 only", None)
    n = codes[0]
    need = n * (n - 1) // 2
    bits_ = []
    for c in codes[1:]:
        for shift in range(5, -1, -1):
            bits_.append(c >> shift & 1)
    if len(bits_) < need or len(bits_) >= need + 6:
        raise ParseError(f"graph6 body has {len(bits_)} bits, expected about {need}", None)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits_[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)
