"""graph6 encoding and newline-delimited graph6 corpora."""

import logging
from pathlib import Path
from typing import Iterable, List, Union

from core.canonical import canonical
from core.errors import Graph6FormatError
from core.graph import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_SMALL_LIMIT = 62
_MEDIUM_LIMIT = 258047


def _encode_order(n: int) -> List[int]:
    if n <= _SMALL_LIMIT:
        return [n + 63]
    if n <= _MEDIUM_LIMIT:
        return [126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)]
    return [126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)]


def encode_graph6(g: Graph, canonicalize: bool = True) -> str:
    """graph6 string for ``g``; by default the canonical form is encoded."""
    if canonicalize:
        g = canonical(g)
    out = _encode_order(g.order)
    bits = []
    for j in range(1, g.order):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return bytes(out).decode("ascii")


def emit_graph6(g: Graph) -> str:
    return encode_graph6(g, canonicalize=True)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 string.

    Args:
        text: graph6 encoding, optionally preceded by the ``>>graph6<<`` header

    Returns:
        The decoded Graph, labeled exactly as encoded

    Raises:
        Graph6FormatError: with the byte offset of the first malformed byte
    """
    if isinstance(text, str):
        for offset, char in enumerate(text):
            if ord(char) > 127:
                raise Graph6FormatError(f"Non-ASCII character {char!r}", offset=offset)
        text = text.encode("ascii")
    data = bytes(text)
    start = len(HEADER) if data.startswith(HEADER.encode("ascii")) else 0
    data = data.rstrip(b"\r\n")
    if len(data) <= start:
        raise Graph6FormatError("Empty graph6 string", offset=start)
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise Graph6FormatError(f"Byte {data[offset]!r} outside the graph6 range", offset=offset)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(data) and data[pos] == 126:
            width = 6
            pos += 1
        if pos + width > len(data):
            raise Graph6FormatError("Truncated vertex count", offset=len(data))
        n = 0
        for k in range(width):
            n = (n << 6) | (data[pos + k] - 63)
        pos += width

    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        bad = pos + min(len(body), expected)
        raise Graph6FormatError(
            f"Expected {expected} adjacency bytes for {n} vertices, found {len(body)}", offset=bad
        )

    rows = [0] * n
    index = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[index // 6] - 63
            if byte >> (5 - index % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index += 1
    if expected and index % 6:
        padding = (body[-1] - 63) & ((1 << (6 - index % 6)) - 1)
        if padding:
            raise Graph6FormatError("Non-zero padding bits", offset=pos + expected - 1)
    return Graph(n, tuple(rows))


def read_graph6_file(path: Union[str, Path]) -> List[Graph]:
    """Read a newline-delimited graph6 corpus, skipping blank lines."""
    graphs = []
    with open(path, "rb") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6FormatError as e:
                raise Graph6FormatError(
                    f"Malformed graph6 in {path}", offset=e.offset, line=line_number
                ) from e
    logger.info(f"Read {len(graphs)} graphs from {path}")
    return graphs


def write_graph6_file(path: Union[str, Path], graphs: Iterable[Graph], canonicalize: bool = True) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as handle:
        for g in graphs:
            handle.write(encode_graph6(g, canonicalize=canonicalize) + "\n")
            count += 1
    logger.info(f"Wrote {count} graphs to {path}")
    return count
