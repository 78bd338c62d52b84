"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix in column
order, that is bit (i, j) for j = 1..n-1 and i = 0..j-1, big-endian in
6-bit groups over the printable alphabet chr(63)..chr(126).  The vertex
count is prefixed in 1, 4, or 8 bytes depending on magnitude; writing
always uses the shortest form so encodings are canonical.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from .graph import Graph

_LOW = 63
_HIGH = 126
_HEADER = b">>graph6<<"
_MAX_N = 68719476735  # 2^36 - 1, the largest count the 8-byte form can carry


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class BadLengthError(Graph6Error):
    pass


class InvalidByteError(Graph6Error):
    def __init__(self, offset: int, byte: int):
        self.offset = offset
        self.byte = byte
        super().__init__(f"invalid graph6 byte 0x{byte:02x} at offset {offset}")


class TrailingGarbageError(Graph6Error):
    def __init__(self, offset: int):
        self.offset = offset
        super().__init__(f"trailing data after graph6 payload at offset {offset}")


def _to_bytes(text: Union[str, bytes]) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise InvalidByteError(0, 0) from exc
    return bytes(text)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    data = _to_bytes(text).strip(b"\r\n")
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
    if not data:
        raise BadLengthError("empty graph6 string")
    for off, byte in enumerate(data):
        if not (_LOW <= byte <= _HIGH):
            raise InvalidByteError(off, byte)

    n, pos = _read_count(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos < need:
        raise BadLengthError(
            f"graph6 payload too short: need {need} bytes for n={n}, have {len(data) - pos}"
        )
    if len(data) - pos > need:
        raise TrailingGarbageError(pos + need)

    bits = 0
    for byte in data[pos:]:
        bits = bits << 6 | (byte - _LOW)
    total = need * 6
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> (total - 1 - k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits past the triangle must be zero for a canonical encoding
    if total > k and bits & ((1 << (total - k)) - 1):
        raise TrailingGarbageError(len(data))
    return Graph(n, tuple(rows))


def _read_count(data: bytes) -> tuple[int, int]:
    if data[0] != _HIGH:
        return data[0] - _LOW, 1
    if len(data) >= 2 and data[1] != _HIGH:
        if len(data) < 4:
            raise BadLengthError("truncated 4-byte vertex count")
        n = 0
        for byte in data[1:4]:
            n = n << 6 | (byte - _LOW)
        return n, 4
    if len(data) < 8:
        raise BadLengthError("truncated 8-byte vertex count")
    n = 0
    for byte in data[2:8]:
        n = n << 6 | (byte - _LOW)
    return n, 8


def write_graph6(g: Graph) -> bytes:
    if g.n > _MAX_N:
        raise ValueError(f"graph too large for graph6: n={g.n}")
    out = bytearray(_write_count(g.n))
    nbits = g.n * (g.n - 1) // 2
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = bits << 1 | (g.rows[i] >> j & 1)
    pad = (-nbits) % 6
    bits <<= pad
    for shift in range(nbits + pad - 6, -1, -6):
        out.append((bits >> shift & 0x3F) + _LOW)
    return bytes(out)


def _write_count(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _LOW])
    if n <= 258047:
        return bytes([_HIGH, (n >> 12 & 0x3F) + _LOW, (n >> 6 & 0x3F) + _LOW, (n & 0x3F) + _LOW])
    return bytes(
        [_HIGH, _HIGH]
        + [(n >> shift & 0x3F) + _LOW for shift in range(30, -1, -6)]
    )


def iter_graph6(lines: Iterable[Union[str, bytes]]) -> Iterator[Graph]:
    """Parse a one-graph-per-line stream, skipping blank lines."""
    for line in lines:
        raw = _to_bytes(line).strip()
        if raw:
            yield parse_graph6(raw)
