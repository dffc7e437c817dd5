"""Graph families with purely imaginary independence roots.

All checks here are exact Gaussian-rational evaluations; nothing is trusted
on the strength of the algebra alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import GaussRat, I, IntPoly
from .errors import ConstructionError
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
    copies,
    multipartite,
    to_text,
)
from .graph import Graph
from .indpoly import ind_poly_expr


@dataclass(frozen=True)
class DiophPair:
    """Solution of x**2 - 3*y**2 = -2 from the order-2 recurrence."""

    n: int
    x: int
    y: int


def dioph(n: int) -> DiophPair:
    """x_1 = y_1 = 1, x_2 = 5, y_2 = 3, then u_n = 4 u_{n-1} - u_{n-2}."""
    if n < 1:
        raise ValueError("index must be positive")
    if n == 1:
        return DiophPair(1, 1, 1)
    x0, y0, x1, y1 = 1, 1, 5, 3
    for _ in range(n - 2):
        x0, x1 = x1, 4 * x1 - x0
        y0, y1 = y1, 4 * y1 - y0
    return DiophPair(n, x1, y1)


def dioph_sequence(n: int) -> list[DiophPair]:
    """The first ``n`` pairs."""
    out = []
    x0, y0, x1, y1 = 1, 1, 5, 3
    for k in range(1, n + 1):
        if k == 1:
            out.append(DiophPair(1, 1, 1))
        elif k == 2:
            out.append(DiophPair(2, 5, 3))
        else:
            x0, x1 = x1, 4 * x1 - x0
            y0, y1 = y1, 4 * y1 - y0
            out.append(DiophPair(k, x1, y1))
    return out


def gabcd_params(n: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) for which G(a,b,c,d) has i as an independence root."""
    pair = dioph(n)
    a = 3 * pair.y
    b = 3 * pair.y * pair.x
    c = 1
    d = 4 * a**3 - 4 * a + b**3 - 3 * b - 2
    if d <= 0:
        raise ConstructionError(f"d = {d} is not positive for n = {n}")
    return a, b, c, d


def _gabcd_parts(a: int, b: int, c: int) -> list[GraphExpr]:
    return [copies(4, Clique(a)), copies(3, Clique(b)), copies(2, Clique(c))]


def build_gabcd(a: int, b: int, c: int, d: int) -> JoinN:
    """G(a,b,c,d) = 4K_a + 3K_b + 2K_c + K_d."""
    if min(a, b, c, d) < 1:
        raise ValueError("parameters must be positive")
    return JoinN(tuple(_gabcd_parts(a, b, c)) + (Clique(d),))


@dataclass(frozen=True)
class SeedRecord:
    alpha: int
    seed: GraphExpr
    d: int


def _table_seeds() -> dict[int, tuple[GraphExpr, int]]:
    a, b, c, d = gabcd_params(1)
    k16_6 = multipartite([6] * 16)
    return {
        4: (JoinN(tuple(_gabcd_parts(a, b, c))), d),
        5: (UnionN((Clique(2), Clique(3), Independent(3))), 20),
        6: (Independent(6), 8),
        7: (multipartite([3, 5, 7]), 10),
        8: (JoinN((Independent(8), k16_6)), 128),
        9: (JoinN((Independent(9), k16_6)), 112),
        10: (UnionN(copies(4, Clique(2)).parts + copies(4, Clique(3)).parts + (Independent(2),)), 5000),
        11: (UnionN(copies(3, Clique(2)).parts + copies(3, Clique(3)).parts + (Independent(5),)), 2000),
    }


_SEEDS = _table_seeds()


def seed(alpha: int) -> SeedRecord:
    """Seed graph G and d with I(G + K_d, i) = 0, for 4 <= alpha <= 11."""
    if alpha not in _SEEDS:
        raise ValueError(f"seeds exist for alpha in 4..11, not {alpha}")
    g, d = _SEEDS[alpha]
    return SeedRecord(alpha, g, d)


def _value_at_i(e: GraphExpr) -> GaussRat:
    return ind_poly_expr(e).eval_gauss(I)


def seed_plus_8k(g: GraphExpr, d: int, k: int) -> JoinN:
    """(G u Kbar_{8k}) + K_{16^k d}: independence number up by 8k, root i kept."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if d < 1:
        raise ValueError("d must be positive")
    g = as_expr(g)
    if _value_at_i(g) != GaussRat(0, -d):
        raise ConstructionError(f"I(G, i) != -{d}i, so G + K_{d} does not vanish at i")
    if k == 0:
        return JoinN((g, Clique(d)))
    return JoinN((UnionN((g, Independent(8 * k))), Clique(16**k * d)))


def graph_with_alpha(alpha: int) -> JoinN:
    """Connected graph with independence number ``alpha`` and roots +-i."""
    if alpha < 4:
        raise ValueError("no such graph exists below alpha = 4")
    k, r = divmod(alpha - 4, 8)
    rec = seed(4 + r)
    return seed_plus_8k(rec.seed, rec.d, k)


def scale_root(g: Graph | GraphExpr, n: int) -> Lex:
    """G[K_|n|], moving the root pair +-i to +-i/|n|."""
    if n == 0:
        raise ValueError("n must be nonzero")
    g = as_expr(g)
    if not _value_at_i(g).is_zero():
        raise ConstructionError("scale_root needs a graph with i as an independence root")
    return Lex(g, Clique(abs(n)))


def table2_term(n: int, k: int) -> GaussRat:
    """i**k * (1 + i)**(2(n - k))."""
    return I**k * GaussRat(1, 1) ** (2 * (n - k))


def half_count(p: IntPoly, n: int) -> int:
    """2**n * p(1/2) as an exact integer (requires deg p <= n)."""
    if p.degree > n:
        raise ValueError("degree exceeds n")
    return sum(s * 2 ** (n - k) for k, s in enumerate(p.coeffs))


def corona_construction(g: Graph | GraphExpr) -> tuple[JoinN, int]:
    """(G o Kbar_2) + K_m with m = 2^n I(G, 1/2), for |G| = 3 (mod 4)."""
    g = as_expr(g)
    n = g.order
    if n % 4 != 3:
        raise ConstructionError(f"order {n} is not 3 mod 4")
    p = ind_poly_expr(g)
    for k, s in enumerate(p.coeffs):
        if s and table2_term(n, k) != GaussRat(0, -(2 ** (n - k))):
            raise ConstructionError(f"term identity fails at k = {k}")
    m = half_count(p, n)
    return JoinN((Corona(g, Independent(2)), Clique(m))), m


@dataclass(frozen=True)
class ConstructionCertificate:
    family: str
    params: dict
    order: int
    alpha: int
    poly: IntPoly
    root: GaussRat
    evaluation_value: GaussRat
    expr: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.evaluation_value.is_zero()

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": {k: (str(v) if isinstance(v, int) else v) for k, v in self.params.items()},
            "order": str(self.order),
            "alpha": self.alpha,
            "poly": self.poly.to_json(),
            "root": [str(self.root.re), str(self.root.im)],
            "evaluation_value": self.evaluation_value.to_json(),
        }
        if self.expr:
            out["expr"] = self.expr
        out.update(self.extra)
        return out


def certify_construction(family: str, params: dict, e: GraphExpr, root: GaussRat,
                         extra: dict | None = None, *, with_expr: bool = True) -> ConstructionCertificate:
    p = ind_poly_expr(e)
    return ConstructionCertificate(
        family=family,
        params=params,
        order=e.order,
        alpha=p.degree,
        poly=p,
        root=root,
        evaluation_value=p.eval_gauss(root),
        expr=to_text(e) if with_expr else "",
        extra=extra or {},
    )


def embed_with_imaginary_roots(g: Graph, k: int) -> tuple[Lex, ConstructionCertificate]:
    """Connected supergraph of ``g`` (induced) with independence roots +-i/|k|.

    H = g + K_{(3 - l) mod 4} where l = |g| mod 4, then (H o Kbar_2) + K_m,
    then the lexicographic product with K_|k|.  Vertex v of g ends up as
    vertex v*|k| of the result.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    kk = abs(k)
    pad = (3 - g.n % 4) % 4
    h = JoinN((Leaf(g), Clique(pad))) if pad else Leaf(g)
    base, m = corona_construction(h)
    result = scale_root(base, kk)
    root = GaussRat(0, Fraction(1, kk))
    witness = [v * kk for v in range(g.n)]
    cert = certify_construction(
        "embed",
        {"k": k, "n": g.n, "pad": pad},
        result,
        root,
        {"m": str(m), "witness": witness, "requested_k": k},
    )
    if not cert.verified:
        raise ConstructionError("embedding does not vanish at i/k")
    return result, cert
