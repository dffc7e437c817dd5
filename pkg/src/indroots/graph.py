"""Concrete simple graphs stored as bitset adjacency rows.

Vertex ``v``'s neighbourhood is the Python int ``adj[v]``; bit ``u`` is set
iff ``u ~ v``.  Graphs are immutable.  Anything above :data:`MAX_ORDER`
vertices has to be described symbolically with :mod:`indroots.expr`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphOrderError

MAX_ORDER = 512  # 64 * 8 words


def _check_cap(n: int, what: str) -> None:
    if n > MAX_ORDER:
        raise GraphOrderError(
            f"{what} would have {n} vertices, above the concrete cap of {MAX_ORDER}; "
            "build it as a GraphExpr instead"
        )


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative order")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        _check_cap(self.n, "graph")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_cap(n, "graph")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def order(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    yield (v, u)
                row >>= 1
                u += 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("repeated vertex")
        rows = []
        for v in vertices:
            row = 0
            for u, j in index.items():
                if self.adj[v] >> u & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, f"K_{n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, f"Kbar_{n}")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; ``[6] * 16`` gives K_{16(6)}."""
    if not parts:
        raise ValueError("need at least one part")
    if any(p <= 0 for p in parts):
        raise ValueError(f"part sizes must be positive: {list(parts)}")
    n = sum(parts)
    _check_cap(n, "complete multipartite graph")
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def union_g(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n, "disjoint union")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join_g(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_cap(n, "join")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    return Graph(
        n,
        tuple(row | h_mask for row in g.adj) + tuple((row << g.n) | g_mask for row in h.adj),
    )


def lex_g(g: Graph, h: Graph) -> Graph:
    """Lexicographic product G[H]; vertex (v, u) is labelled v * |H| + u."""
    k = h.n
    _check_cap(g.n * k, "lexicographic product")
    block = (1 << k) - 1
    rows = []
    for v in range(g.n):
        outer = 0
        r = g.adj[v]
        while r:
            low = r & -r
            outer |= block << (k * (low.bit_length() - 1))
            r ^= low
        for u in range(k):
            rows.append(outer | (h.adj[u] << (k * v)))
    return Graph(g.n * k, tuple(rows))


def corona_g(g: Graph, h: Graph) -> Graph:
    """Corona G o H.

    Labels: the G vertices come first, then the copy of H hanging off
    vertex v occupies ``n_G + v * n_H + (0..n_H-1)``.
    """
    n_g, n_h = g.n, h.n
    n = n_g * (1 + n_h)
    _check_cap(n, "corona")
    block = (1 << n_h) - 1
    rows = [g.adj[v] | (block << (n_g + v * n_h)) for v in range(n_g)]
    for v in range(n_g):
        shift = n_g + v * n_h
        for u in range(n_h):
            rows.append((h.adj[u] << shift) | (1 << v))
    return Graph(n, tuple(rows))

