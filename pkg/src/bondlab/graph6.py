"""graph6 and edge-list text formats.

graph6 layout used here: one length byte n+63 for n <= 62, or '~' plus
three 6-bit chunks for n = 63..64; then the upper-triangle adjacency
bits in column-major order (x01, x02, x12, x03, ...), packed six per
byte MSB-first, zero-padded, each payload byte offset by 63.

Edge-list files: first line "n m", then m lines "u v".
"""

from __future__ import annotations

from .errors import ParseError, SizeLimit
from .graphs import MAX_VERTICES, Graph, build_graph

HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """Canonical graph6 of g under its current labeling."""
    chunks = []
    if g.n <= 62:
        chunks.append(g.n + 63)
    else:
        chunks.append(126)
        chunks.append(((g.n >> 12) & 63) + 63)
        chunks.append(((g.n >> 6) & 63) + 63)
        chunks.append((g.n & 63) + 63)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        chunks.append((acc << (6 - nbits)) + 63)
    return "".join(chr(c) for c in chunks)


def parse_graph6(text) -> Graph:
    """Decode one graph6 line; round-trips with write_graph6."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise ParseError("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("graph6 byte outside printable range 63..126")
    if data[0] <= 62:
        n = data[0]
        pos = 1
    else:
        if len(data) < 4:
            raise ParseError("truncated long-form length")
        if data[1] == 63 and len(data) >= 2 and line[1] == "~":
            raise SizeLimit("graph6 with > 64 vertices not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n < 1:
        raise ParseError("graph6 with zero vertices")
    if n > MAX_VERTICES:
        raise SizeLimit(f"graph6 with {n} vertices exceeds {MAX_VERTICES}")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    payload = data[pos:]
    if len(payload) != need_bytes:
        raise ParseError(
            f"graph6 payload has {len(payload)} bytes, expected {need_bytes}"
        )
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[bit // 6]
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    # trailing pad bits must be zero
    if need_bits % 6:
        tail = payload[-1] & ((1 << (6 - need_bits % 6)) - 1)
        if tail:
            raise ParseError("nonzero padding bits in graph6 payload")
    return build_graph(n, edges)


def iter_graph6(lines):
    """Yield (line, Graph) for each non-blank graph6 line, skipping the header."""
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith(HEADER):
            line = line[len(HEADER):]
            if not line:
                continue
        yield line, parse_graph6(line)


def write_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.edge_count()}"]
    rows.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(rows) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ParseError("edge list needs a 'n m' header line")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from None
    n, m = values[0], values[1]
    if len(values) != 2 + 2 * m:
        raise ParseError(f"edge list declares {m} edges but has {(len(values) - 2) / 2}")
    pairs = list(zip(values[2::2], values[3::2]))
    return build_graph(n, pairs)


def parse_graph_text(text: str) -> Graph:
    """Autodetect graph6 vs edge-list by the first non-space byte."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty graph input")
    if stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])
