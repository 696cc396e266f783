"""graph6 codec for interchange with standard small-graph enumerators.

One graph per line; the optional ">>graph6<<" header is tolerated and
stripped. Orders up to 62 are supported (single-byte order encoding).
"""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(GraphError):
    """Malformed graph6 input; offset is the byte position in the payload."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line."""
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range [63, 126]", offset=i)
    if s[0] == "~":
        raise Graph6Error("orders above 62 are not supported", offset=0)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for order {n}, got {len(s) - 1}",
            offset=len(s),
        )
    adj = [0] * n
    k = 0
    for byte_index in range(nbytes):
        group = ord(s[1 + byte_index]) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if group >> shift & 1:
                i, j = _bit_position(k)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def _bit_position(k: int) -> tuple[int, int]:
    # k-th bit of R(x) is cell (i, j) of the upper triangle, column by column.
    j = 1
    while k >= j:
        k -= j
        j += 1
    return k, j


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    n = g.order
    if n > MAX_ORDER:
        raise Graph6Error(f"orders above {MAX_ORDER} are not supported")
    out = [chr(n + 63)]
    group = 0
    width = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(group + 63))
                group = 0
                width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def iter_graph6(stream: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Decode a stream of graph6 lines as (line_number, graph-or-error) pairs.

    Line numbers are 1-based; blank lines are skipped.
    """
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> int:
    """Write graphs one per line; returns the number written."""
    count = 0
    for g in graphs:
        stream.write(emit_graph6(g) + "\n")
        count += 1
    return count
