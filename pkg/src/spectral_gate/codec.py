"""graph6 / sparse6 text codecs (one graph per line, bit-exact).

graph6 carries simple graphs; sparse6 (':' prefix) carries multigraphs with
multiplicities preserved.  Encoders emit the standard padding, including the
power-of-two corner case that would otherwise decode as a phantom loop.
"""

from __future__ import annotations

from typing import Iterator

from .errors import LoopEdge, MalformedEncoding
from .graphs import Multigraph

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    """Read the N(n) size field, returning (n, next position)."""
    if pos >= len(data):
        raise MalformedEncoding("missing size field", pos)
    b0 = data[pos]
    if not 63 <= b0 <= 126:
        raise MalformedEncoding(f"size byte {b0} outside 63..126", pos)
    if b0 != 126:
        return b0 - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        count, start = 6, pos + 2
    else:
        count, start = 3, pos + 1
    if start + count > len(data):
        raise MalformedEncoding("truncated size field", len(data))
    n = 0
    for i in range(count):
        b = data[start + i]
        if not 63 <= b <= 126:
            raise MalformedEncoding(f"size byte {b} outside 63..126", start + i)
        n = (n << 6) | (b - 63)
    return n, start + count


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)])
    raise ValueError(f"vertex count {n} exceeds the graph6 limit")


class _BitReader:
    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos  # byte offset of the next unread byte
        self.buffer = 0
        self.nbits = 0

    def read(self, k: int) -> int | None:
        """Next k bits MSB-first, or None if the stream is exhausted."""
        while self.nbits < k:
            if self.pos >= len(self.data):
                return None
            b = self.data[self.pos]
            if not 63 <= b <= 126:
                raise MalformedEncoding(f"data byte {b} outside 63..126", self.pos)
            self.buffer = (self.buffer << 6) | (b - 63)
            self.nbits += 6
            self.pos += 1
        self.nbits -= k
        out = self.buffer >> self.nbits
        self.buffer &= (1 << self.nbits) - 1
        return out


class _BitWriter:
    def __init__(self) -> None:
        self.bits: list[int] = []

    def write(self, value: int, k: int) -> None:
        for shift in range(k - 1, -1, -1):
            self.bits.append((value >> shift) & 1)

    def to_bytes(self) -> bytes:
        assert len(self.bits) % 6 == 0
        out = bytearray()
        for i in range(0, len(self.bits), 6):
            group = 0
            for b in self.bits[i : i + 6]:
                group = (group << 1) | b
            out.append(group + 63)
        return bytes(out)


def _strip_header(line: str) -> str:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    elif s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER) :]
    return s


def parse_graph6(line: str) -> Multigraph:
    """Decode one graph6 or sparse6 line into a Multigraph."""
    s = _strip_header(line)
    if not s:
        raise MalformedEncoding("empty line", 0)
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None:
        raise MalformedEncoding("non-ASCII character", 0)
    if data[0:1] == b":":
        return _parse_sparse6(data)
    return _parse_simple_graph6(data)


def _parse_simple_graph6(data: bytes) -> Multigraph:
    n, pos = _decode_n(data, 0)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) - pos != nbytes:
        raise MalformedEncoding(
            f"expected {nbytes} data bytes for n={n}, found {len(data) - pos}", pos
        )
    reader = _BitReader(data, pos)
    mult: dict[tuple[int, int], int] = {}
    for j in range(1, n):
        for i in range(j):
            bit = reader.read(1)
            if bit:
                mult[(i, j)] = 1
    tail = reader.read(reader.nbits) if reader.nbits else 0
    if tail:
        raise MalformedEncoding("non-zero padding bits", len(data) - 1)
    return Multigraph(n, mult)


def _parse_sparse6(data: bytes) -> Multigraph:
    n, pos = _decode_n(data, 1)
    k = max(1, (n - 1).bit_length())
    reader = _BitReader(data, pos)
    mult: dict[tuple[int, int], int] = {}
    v = 0
    while True:
        b = reader.read(1)
        if b is None:
            break
        x = reader.read(k)
        if x is None:
            break
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise LoopEdge(v)
            key = (x, v)
            mult[key] = mult.get(key, 0) + 1
    return Multigraph(n, mult)


def encode_graph6(G: Multigraph) -> str:
    """Encode a simple graph as graph6."""
    if not G.simple():
        raise ValueError("graph6 cannot carry multiplicities; use encode_sparse6")
    writer = _BitWriter()
    for j in range(1, G.n):
        for i in range(j):
            writer.write(1 if G.mult(i, j) else 0, 1)
    pad = (-len(writer.bits)) % 6
    if pad:
        writer.write(0, pad)
    return (_encode_n(G.n) + writer.to_bytes()).decode("ascii")


def encode_sparse6(G: Multigraph) -> str:
    """Encode any multigraph as sparse6 (multiplicities preserved)."""
    n = G.n
    k = max(1, (n - 1).bit_length())
    writer = _BitWriter()
    v = 0
    slots = sorted(((max(u, w), min(u, w)) for u, w, mu in G.edges() for _ in range(mu)))
    for y, x in slots:
        if y == v:
            writer.write(0, 1)
            writer.write(x, k)
        elif y == v + 1:
            v += 1
            writer.write(1, 1)
            writer.write(x, k)
        else:
            v = y
            writer.write(0, 1)
            writer.write(y, k)
            writer.write(0, 1)
            writer.write(x, k)
    pad = (-len(writer.bits)) % 6
    if pad:
        # All-ones padding decodes as a loop on n-1 exactly when n = 2^k and
        # the running vertex sits at n-2; lead with a 0 bit in that case.
        if n == (1 << k) and pad >= k + 1 and v == n - 2:
            writer.write(0, 1)
            writer.write((1 << (pad - 1)) - 1, pad - 1)
        else:
            writer.write((1 << pad) - 1, pad)
    return (b":" + _encode_n(n) + writer.to_bytes()).decode("ascii")


def encode_auto(G: Multigraph) -> str:
    """graph6 for simple graphs, sparse6 otherwise."""
    return encode_graph6(G) if G.simple() else encode_sparse6(G)


def iter_graph_lines(text: str) -> Iterator[tuple[int, Multigraph]]:
    """Parse every non-blank line of a graph6/sparse6 document."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield lineno, parse_graph6(line)
