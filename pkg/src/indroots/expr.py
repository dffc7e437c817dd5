"""Symbolic graph expressions.

A ``GraphExpr`` describes a graph built from leaves with disjoint union,
join, lexicographic product and corona.  Orders are exact integers and may
be far beyond what a concrete :class:`~indroots.graph.Graph` can hold; the
independence polynomial is obtained compositionally (see
:func:`indroots.indpoly.ind_poly_expr`).

Clique and edgeless leaves carry only their size, so ``K[10**30]`` costs
nothing until someone asks for a concrete realisation.

Vertex labelling of a realisation follows the concrete operations in
:mod:`indroots.graph`: union/join concatenate, ``Lex`` uses
``outer * |inner| + inner``, and ``Corona`` lists the base first and then
one attached copy per base vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from . import graph as G
from .graph import Graph
from .graph6 import write_graph6


@dataclass(frozen=True)
class GraphExpr:
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    @property
    def order(self) -> int:
        raise NotImplementedError

    def children(self) -> tuple["GraphExpr", ...]:
        return ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Leaf(GraphExpr):
    graph: Graph = None

    @property
    def order(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Clique(GraphExpr):
    """K_n for any nonnegative integer n."""

    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative clique size")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class Independent(GraphExpr):
    """The edgeless graph on n vertices."""

    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative size")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class UnionN(GraphExpr):
    parts: tuple[GraphExpr, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def order(self) -> int:
        return sum(p.order for p in self.parts)

    def children(self):
        return self.parts


@dataclass(frozen=True)
class JoinN(GraphExpr):
    parts: tuple[GraphExpr, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def order(self) -> int:
        return sum(p.order for p in self.parts)

    def children(self):
        return self.parts


@dataclass(frozen=True)
class Lex(GraphExpr):
    outer: GraphExpr = None
    inner: GraphExpr = None

    @property
    def order(self) -> int:
        return self.outer.order * self.inner.order

    def children(self):
        return (self.outer, self.inner)


@dataclass(frozen=True)
class Corona(GraphExpr):
    base: GraphExpr = None
    attach: GraphExpr = None

    @property
    def order(self) -> int:
        return self.base.order * (1 + self.attach.order)

    def children(self):
        return (self.base, self.attach)


def as_expr(x: Graph | GraphExpr) -> GraphExpr:
    if isinstance(x, GraphExpr):
        return x
    if isinstance(x, Graph):
        return Leaf(x)
    raise TypeError(f"expected Graph or GraphExpr, got {type(x).__name__}")


def union(*parts: Graph | GraphExpr) -> UnionN:
    return UnionN(tuple(as_expr(p) for p in parts))


def join(*parts: Graph | GraphExpr) -> JoinN:
    return JoinN(tuple(as_expr(p) for p in parts))


def copies(m: int, e: Graph | GraphExpr) -> UnionN:
    """``m`` disjoint copies of ``e`` (the ``mK_n`` notation)."""
    if m < 0:
        raise ValueError("negative multiplicity")
    e = as_expr(e)
    return UnionN((e,) * m)


def multipartite(parts: Sequence[int]) -> JoinN:
    """Complete multipartite graph as a join of edgeless parts."""
    if not parts or any(p <= 0 for p in parts):
        raise ValueError(f"part sizes must be positive: {list(parts)}")
    return JoinN(tuple(Independent(p) for p in parts))


def order(e: Graph | GraphExpr) -> int:
    return as_expr(e).order


def realize(e: Graph | GraphExpr) -> Graph:
    """Concrete graph for ``e``; fails with GraphOrderError above the cap."""
    e = as_expr(e)
    if e.order > G.MAX_ORDER:
        raise G.GraphOrderError(
            f"expression has order {e.order}, above the concrete cap of {G.MAX_ORDER}"
        )
    return _realize(e)


def _realize(e: GraphExpr) -> Graph:
    if isinstance(e, Leaf):
        return e.graph
    if isinstance(e, Clique):
        return G.complete(e.n)
    if isinstance(e, Independent):
        return G.empty_graph(e.n)
    if isinstance(e, UnionN):
        return reduce(G.union_g, (_realize(p) for p in e.parts), G.empty_graph(0))
    if isinstance(e, JoinN):
        return reduce(G.join_g, (_realize(p) for p in e.parts), G.empty_graph(0))
    if isinstance(e, Lex):
        return G.lex_g(_realize(e.outer), _realize(e.inner))
    if isinstance(e, Corona):
        return G.corona_g(_realize(e.base), _realize(e.attach))
    raise TypeError(f"unknown expression node {type(e).__name__}")


def to_text(e: GraphExpr) -> str:
    """Render in the expression language understood by :func:`indroots.parser.parse_expr`."""
    if isinstance(e, Leaf):
        return "g6:" + write_graph6(e.graph)
    if isinstance(e, Clique):
        return f"K[{e.n}]"
    if isinstance(e, Independent):
        return f"Kbar[{e.n}]"
    if isinstance(e, (UnionN, JoinN)):
        if not e.parts:
            return "Kbar[0]"
        if isinstance(e, UnionN) and len(e.parts) > 1 and _is_atom(e.parts[0]) \
                and all(p == e.parts[0] for p in e.parts):
            return f"{len(e.parts)}*{to_text(e.parts[0])}"
        name = "union" if isinstance(e, UnionN) else "join"
        return f"{name}({','.join(to_text(p) for p in e.parts)})"
    if isinstance(e, Lex):
        return f"lex({to_text(e.outer)},{to_text(e.inner)})"
    if isinstance(e, Corona):
        return f"corona({to_text(e.base)},{to_text(e.attach)})"
    raise TypeError(f"unknown expression node {type(e).__name__}")


def _is_atom(e: GraphExpr) -> bool:
    return isinstance(e, (Leaf, Clique, Independent))
