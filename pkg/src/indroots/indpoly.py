"""Independence polynomials of concrete graphs and of graph expressions."""
from __future__ import annotations

import numpy as np

from .arith import IntPoly, one_plus_x_pow
from .errors import OrderGuardError
from .expr import (
    Clique,
    Corona,
    GraphExpr,
    Independent,
    JoinN,
    Leaf,
    Lex,
    UnionN,
    as_expr,
)
from .graph import Graph

ORACLE_MAX_ORDER = 25
DEFAULT_MAX_ORDER = 60
DEFAULT_CACHE_LIMIT = 1 << 22


def ind_poly_oracle(g: Graph) -> IntPoly:
    """Count independent sets by brute force over all 2**n vertex subsets.

    Subsets are indexed by their bitset; the sets containing vertex k as
    their top element are checked in one vectorised step against adj[k].
    """
    n = g.n
    if n > ORACLE_MAX_ORDER:
        raise OrderGuardError(f"oracle limited to {ORACLE_MAX_ORDER} vertices, got {n}")
    indep = np.zeros(1 << n, dtype=bool)
    size = np.zeros(1 << n, dtype=np.int8)
    indep[0] = True
    for k in range(n):
        lo = 1 << k
        lower = np.arange(lo, dtype=np.uint32)
        indep[lo:2 * lo] = indep[:lo] & ((lower & np.uint32(g.adj[k] & (lo - 1))) == 0)
        size[lo:2 * lo] = size[:lo] + 1
    counts = np.bincount(size[indep], minlength=n + 1)
    return IntPoly(int(c) for c in counts)


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for k, v in enumerate(b):
        c[k] += v
    return tuple(c)


def _pmul(a: tuple, b: tuple) -> tuple:
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            c[i + j] += ai * bj
    return tuple(c)


def ind_poly(g: Graph, *, max_order: int = DEFAULT_MAX_ORDER,
             cache_limit: int = DEFAULT_CACHE_LIMIT) -> IntPoly:
    """Independence polynomial via I(G) = I(G - v) + x I(G - N[v]).

    Connected components are multiplied separately; the pivot is a vertex of
    maximum degree (lowest index on ties).  Results are memoised on the
    bitset of surviving vertices; once ``cache_limit`` entries exist, new
    results are simply not stored.
    """
    if g.n > max_order:
        raise OrderGuardError(
            f"ind_poly limited to {max_order} vertices, got {g.n}; "
            "describe the graph as a GraphExpr instead"
        )
    adj = g.adj
    memo: dict[int, tuple] = {}

    def rec(mask: int) -> tuple:
        if mask == 0:
            return (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if mask & (mask - 1) == 0:
            return (1, 1)

        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            nb = 0
            f = frontier
            while f:
                b = f & -f
                nb |= adj[b.bit_length() - 1]
                f ^= b
            nb &= mask
            frontier = nb & ~comp
            comp |= nb

        if comp != mask:
            res = _pmul(rec(comp), rec(mask ^ comp))
        else:
            best = -1
            pivot = 0
            m = mask
            while m:
                b = m & -m
                v = b.bit_length() - 1
                d = (adj[v] & mask).bit_count()
                if d > best:
                    best, pivot = d, v
                m ^= b
            bit = 1 << pivot
            without = rec(mask & ~bit)
            closed = rec(mask & ~(adj[pivot] | bit))
            res = _padd(without, (0,) + closed)
        if len(memo) < cache_limit:
            memo[mask] = res
        return res

    return IntPoly(rec((1 << g.n) - 1))


def ind_poly_expr(e: Graph | GraphExpr) -> IntPoly:
    """Independence polynomial of an expression, combined bottom-up.

    union: product; join of k parts: sum minus (k - 1);
    lex G[H]: I(G, I(H) - 1); corona G o H with |G| = n:
    sum_k s_k x^k I(H)^(n - k), the cleared-denominator corona formula.
    """
    e = as_expr(e)
    cached = e._cache.get("poly")
    if cached is not None:
        return cached
    if isinstance(e, Leaf):
        p = ind_poly(e.graph)
    elif isinstance(e, Clique):
        p = IntPoly((1, e.n))
    elif isinstance(e, Independent):
        p = one_plus_x_pow(e.n)
    elif isinstance(e, UnionN):
        p = IntPoly((1,))
        for part in e.parts:
            p = p * ind_poly_expr(part)
    elif isinstance(e, JoinN):
        total = IntPoly(())
        for part in e.parts:
            total = total + ind_poly_expr(part)
        p = total - (len(e.parts) - 1)
    elif isinstance(e, Lex):
        p = ind_poly_expr(e.outer).compose(ind_poly_expr(e.inner) - 1)
    elif isinstance(e, Corona):
        p = _corona_poly(ind_poly_expr(e.base), e.base.order, ind_poly_expr(e.attach))
    else:
        raise TypeError(f"unknown expression node {type(e).__name__}")
    e._cache["poly"] = p
    return p


def _corona_poly(base: IntPoly, n: int, attach: IntPoly) -> IntPoly:
    a = base.degree
    # powers attach**(n - a) .. attach**n, built upward
    power = attach.pow(n - a)
    total = IntPoly(())
    for k in range(a, -1, -1):
        s_k = base[k]
        if s_k:
            total = total + (power * s_k).shift_x(k)
        if k:
            power = power * attach
    return total


def alpha(e: Graph | GraphExpr) -> int:
    """Independence number, read off as the degree of the polynomial."""
    return ind_poly_expr(e).degree


def order(e: Graph | GraphExpr) -> int:
    return as_expr(e).order
