"""Bit-exact graph6 encoding and decoding (short form, n <= 62).

Format: one printable byte n+63 for the order, then the upper triangle of
the adjacency matrix in column-major order (bit (i,j) for j = 1..n-1,
i = 0..j-1), packed big-endian six bits per character, each character
offset by 63.  Padding bits must be zero; nonzero padding is rejected
rather than repaired so that streams interoperate byte-for-byte with
externally generated census files.
"""

from __future__ import annotations

import io
from typing import Iterable, Iterator

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def decode(code: str) -> Graph:
    if not code:
        raise Graph6Error("empty graph6 code")
    for ch in code:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    n = ord(code[0]) - 63
    if n == 63:
        raise Graph6Error("long-form order (n >= 63) not supported")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"order {n} outside supported range 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = code[1:]
    if len(data) != nchars:
        raise Graph6Error(f"expected {nchars} data characters for n={n}, got {len(data)}")
    bits = 0
    for ch in data:
        bits = bits << 6 | (ord(ch) - 63)
    pad = nchars * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1  # bit 'pos' of the packed value is the first pair (0,1)
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, rows)


def encode(g: Graph) -> str:
    bits = 0
    nbits = g.n * (g.n - 1) // 2
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            bits = bits << 1 | (rj >> i & 1)
    nchars = (nbits + 5) // 6
    bits <<= nchars * 6 - nbits
    out = [chr(g.n + 63)]
    for k in range(nchars - 1, -1, -1):
        out.append(chr((bits >> (6 * k) & 63) + 63))
    return "".join(out)


def iter_codes(lines: Iterable[str]) -> Iterator[str]:
    """Yield graph6 codes from an iterable of lines.

    Blank lines are skipped; a leading '>>graph6<<' header is accepted and
    stripped (it may share a line with the first code).
    """
    first = True
    for line in lines:
        line = line.rstrip("\n").rstrip("\r")
        if first:
            first = False
            if line.startswith(HEADER):
                line = line[len(HEADER) :]
        if line:
            yield line


def iter_graphs(lines: Iterable[str]) -> Iterator[Graph]:
    for code in iter_codes(lines):
        yield decode(code)


def read_graph6_file(path: str) -> Iterator[Graph]:
    with io.open(path, "r", encoding="ascii") as fobj:
        yield from iter_graphs(fobj)


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> int:
    count = 0
    with io.open(path, "w", encoding="ascii") as fobj:
        for g in graphs:
            fobj.write(encode(g) + "\n")
            count += 1
    return count
