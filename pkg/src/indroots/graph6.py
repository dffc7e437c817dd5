"""graph6 encoding of labelled simple graphs.

Each byte carries six bits offset by 63.  The size word is one byte for
n <= 62 and ``~`` plus three bytes for n <= 258047.  The body lists the
upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
"""
from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
_MAX_N = 258047


def _size_word(n: int) -> bytes:
    if n < 0 or n > _MAX_N:
        raise Graph6Error(f"order {n} not encodable in graph6")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def write_graph6(g: Graph) -> str:
    out = bytearray(_size_word(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    if s.startswith(":") or s.startswith("&"):
        raise Graph6Error("sparse6/digraph6 input is not supported", base)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        bad = next(i for i, ch in enumerate(s) if ord(ch) > 127)
        raise Graph6Error("non-ASCII character", base + bad) from None
    for i, b in enumerate(data):
        if b < 63 or b > 126:
            raise Graph6Error(f"character {chr(b)!r} outside [63,126]", base + i)

    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size word", base + len(data))
        if data[1] == 126:
            raise Graph6Error("orders above 258047 are not supported", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error(f"non-canonical long size word for n={n}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} body bytes for n={n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    pad = need * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)

    rows = [0] * n
    byte_i = 0
    cur = 0
    left = 0
    for j in range(1, n):
        for i in range(j):
            if left == 0:
                cur = body[byte_i] - 63
                byte_i += 1
                left = 6
            left -= 1
            if cur >> left & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
