"""Serialization: graph6, plain edge lists, and the JSON documents.

graph6 follows the published format (optional ``>>graph6<<`` header,
6-bit chunks offset by 63, upper triangle in column order).  The edge-list
format is one graph per file: a header line ``n m`` followed by m lines
``u v``.

The coloring document is JSON ``{"n": ..., "edges": [[u, v, color], ...]}``
with an optional ``"provenance"`` object attached by the constructions.
Cover maps serialize as ``{"source_n", "target_n", "assignment"}`` plus
``source_edges``/``target_edges`` so documents are self-contained.
"""

from __future__ import annotations

import json

from .errors import EncodingError
from .graphs import EdgeColoring, Graph, build_graph

_HEADER = ">>graph6<<"


def _parse_graph6_size(data: bytes) -> tuple[int, int]:
    """Decode N(n); return (n, bytes consumed)."""
    if not data:
        raise EncodingError("empty graph6 string")
    if data[0] != 126:  # '~'
        n = data[0] - 63
        if n < 0:
            raise EncodingError(f"bad graph6 size byte {data[0]}")
        return n, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise EncodingError("truncated graph6 size")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise EncodingError("truncated graph6 size")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string into a Graph."""
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
    if not line:
        raise EncodingError("empty graph6 string")
    data = line.encode("ascii", errors="strict") if line.isascii() else None
    if data is None:
        raise EncodingError("graph6 strings are ASCII")
    if any(b < 63 or b > 126 for b in data):
        raise EncodingError("graph6 byte out of range")
    n, used = _parse_graph6_size(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise EncodingError(
            f"graph6 body length {len(body)} does not match n={n}"
        )
    bits = []
    for b in body:
        x = b - 63
        bits.extend((x >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise EncodingError("nonzero padding bits in graph6 body")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return build_graph(n, pairs)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 line (no header)."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise EncodingError(f"graph6 supports n <= 258047, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    return bytes(prefix + body).decode("ascii")


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per non-empty line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def parse_edgelist(text: str) -> Graph:
    """Decode the ``n m`` header plus ``u v`` lines format."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise EncodingError("empty edge-list input")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise EncodingError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise EncodingError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise EncodingError(f"bad edge line {ln!r}") from exc
        pairs.append((u, v))
    return build_graph(n, pairs)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph_text(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise EncodingError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# Coloring documents
# ---------------------------------------------------------------------------


def coloring_document(
    g: Graph, coloring: EdgeColoring, provenance: dict | None = None
) -> dict:
    doc: dict = {
        "n": g.n,
        "edges": [
            [u, v, coloring.colors[i]] for i, (u, v) in enumerate(g.edges)
        ],
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def parse_coloring_document(doc: dict) -> tuple[Graph, EdgeColoring]:
    """Rebuild (graph, coloring) from a coloring document."""
    try:
        n = int(doc["n"])
        rows = list(doc["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise EncodingError(f"malformed coloring document: {exc}") from exc
    pairs = []
    color_of: dict[tuple[int, int], int | None] = {}
    for row in rows:
        if len(row) != 3:
            raise EncodingError(f"coloring rows are [u, v, color], got {row!r}")
        u, v, c = row
        key = (u, v) if u < v else (v, u)
        pairs.append(key)
        color_of[key] = None if c is None else int(c)
    g = build_graph(n, pairs)
    colors = tuple(color_of[e] for e in g.edges)
    return g, EdgeColoring(colors)


def coloring_document_json(
    g: Graph, coloring: EdgeColoring, provenance: dict | None = None
) -> str:
    return json.dumps(coloring_document(g, coloring, provenance), indent=2)


def load_coloring_json(text: str) -> tuple[Graph, EdgeColoring]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EncodingError(f"coloring document is not valid JSON: {exc}") from exc
    return parse_coloring_document(doc)


# ---------------------------------------------------------------------------
# Cover-map documents
# ---------------------------------------------------------------------------


def cover_document(source: Graph, target: Graph, assignment) -> dict:
    return {
        "source_n": source.n,
        "target_n": target.n,
        "assignment": list(assignment),
        "source_edges": [list(e) for e in source.edges],
        "target_edges": [list(e) for e in target.edges],
    }


def parse_cover_document(doc: dict) -> tuple[Graph, Graph, list[int]]:
    try:
        source = build_graph(int(doc["source_n"]), [tuple(e) for e in doc["source_edges"]])
        target = build_graph(int(doc["target_n"]), [tuple(e) for e in doc["target_edges"]])
        assignment = [int(x) for x in doc["assignment"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise EncodingError(f"malformed cover document: {exc}") from exc
    if len(assignment) != source.n:
        raise EncodingError("cover assignment length must equal source_n")
    return source, target, assignment
