"""Polynomial gcd and exact real-root bookkeeping.

Everything stays in integer or rational arithmetic.  The gcd uses the
subresultant pseudo-remainder sequence; root counting uses Sturm chains on
the square-free part.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .polynomial import IntPoly

BigRat = Fraction

# divisor enumeration is used for the rational root test only below this size
_DIVISOR_LIMIT = 10**10


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    db = b.degree
    if a.degree < db:
        return a
    bc = b.coeffs
    lb = bc[-1]
    e = a.degree - db + 1
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, v in enumerate(bc):
            r[shift + i] -= lr * v
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e:
        f = lb**e
        r = [c * f for c in r]
    return IntPoly(r)


def divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b`` in Z[x]; raises if ``b`` does not divide ``a`` there."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lb = bc[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return IntPoly()
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError(f"{b} does not divide {a} over the integers")
        q[k] = c
        if c:
            for i, v in enumerate(bc):
                r[k + i] -= c * v
    if any(r[:db]):
        raise ArithmeticError(f"{b} does not divide {a}")
    return IntPoly(q)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if q.is_zero():
        return p.primitive()
    if p.is_zero():
        return q.primitive()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return IntPoly((1,))
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = prem(a, b)
        if r.is_zero():
            return b.primitive()
        if r.degree == 0:
            return IntPoly((1,))
        div = g * h**delta
        a, b = b, IntPoly(c // div for c in r.coeffs)
        g = a.lead
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)


def square_free(p: IntPoly) -> IntPoly:
    """Primitive square-free part ``p / gcd(p, p')``."""
    pp = p.primitive()
    if pp.degree <= 0:
        return pp
    return divexact(pp, poly_gcd(pp, pp.derivative())).primitive()


# Sturm chains ----------------------------------------------------------------


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of ``p`` with every member scaled by a positive constant."""
    chain = [p]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d)
    while True:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if r.is_zero():
            break
        # prem = lc(b)^e * rem; strip that factor's sign, then negate
        e = a.degree - b.degree + 1
        if b.lead < 0 and e % 2:
            r = -r
        r = -r
        c = r.content()
        chain.append(IntPoly(x // c for x in r.coeffs))
        if r.degree == 0:
            break
    return chain


def _sign_variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at(chain: list[IntPoly], t: Fraction | None) -> int:
    """Sign variations of the chain at ``t``; ``None`` stands for minus infinity."""
    if t is None:
        return _sign_variations(
            (1 if p.lead > 0 else -1) * (-1 if p.degree % 2 else 1) for p in chain
        )
    return _sign_variations(p.sign_at(t) for p in chain)


def count_roots(chain: list[IntPoly], lo: Fraction | None, hi: Fraction) -> int:
    """Distinct roots of ``chain[0]`` in ``(lo, hi]``; ``lo`` must not be a root."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def cauchy_bound(p: IntPoly) -> Fraction:
    """Every root of ``p`` has absolute value below this bound."""
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]), lead)


# rational roots ---------------------------------------------------------------


def _divisors(n: int) -> list[int] | None:
    n = abs(n)
    if n > _DIVISOR_LIMIT:
        return None
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots_by_divisors(q: IntPoly) -> list[Fraction] | None:
    nums = _divisors(q.coeffs[0])
    dens = _divisors(q.lead)
    if nums is None or dens is None:
        return None
    found = set()
    for u in nums:
        for v in dens:
            for s in (u, -u):
                t = Fraction(s, v)
                if t not in found and q.sign_at(t) == 0:
                    found.add(t)
    return sorted(found)


class _RootHit(Exception):
    def __init__(self, root: Fraction):
        self.root = root


def _isolate(q: IntPoly, chain, lo: Fraction, hi: Fraction, count: int, out, *,
             width: Fraction | None = None, strictly_negative: bool = False) -> None:
    """Bisect ``(lo, hi]`` until each piece holds one root.

    With ``width`` set, keep going until pieces are narrower than it.  A
    midpoint that is itself a root raises ``_RootHit``.
    """
    stack = [(lo, hi, count)]
    while stack:
        a, b, c = stack.pop()
        if c == 0:
            continue
        if c == 1 and (width is None or b - a < width) and not (strictly_negative and b >= 0):
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if q.sign_at(mid) == 0:
            raise _RootHit(mid)
        left = count_roots(chain, a, mid)
        # push right first so intervals come out in ascending order
        stack.append((mid, b, c - left))
        stack.append((a, mid, left))
    out.sort()


def _rational_roots_by_isolation(q: IntPoly) -> list[Fraction]:
    """Rational roots of a square-free primitive ``q`` with ``q(0) != 0``.

    A rational root u/v has v | lc(q), so it lies on the lattice (1/L)Z with
    L = |lc(q)|.  Isolate each real root to width < 1/L and test the one
    lattice point the interval can contain.
    """
    found: list[Fraction] = []
    while q.degree >= 1:
        chain = sturm_chain(q)
        bound = cauchy_bound(q)
        lead = abs(q.lead)
        total = count_roots(chain, -bound, bound)
        pieces: list[tuple[Fraction, Fraction]] = []
        try:
            _isolate(q, chain, -bound, bound, total, pieces, width=Fraction(1, lead))
        except _RootHit as hit:
            found.append(hit.root)
            q = divexact(q, IntPoly((-hit.root.numerator, hit.root.denominator)))
            continue
        for a, b in pieces:
            k = -((-a.numerator * lead) // a.denominator)  # ceil(a * L)
            t = Fraction(k, lead)
            if t == a:
                t = Fraction(k + 1, lead)
            if t <= b and q.sign_at(t) == 0:
                found.append(t)
        break
    return sorted(found)


def rational_roots(p: IntPoly) -> list[BigRat]:
    """Distinct rational roots of ``p`` (0 included when x divides p)."""
    if p.is_zero():
        raise ValueError("zero polynomial has every number as a root")
    k, q = p.strip_x()
    roots = [Fraction(0)] if k else []
    if q.degree <= 0:
        return roots
    q = square_free(q)
    found = _rational_roots_by_divisors(q)
    if found is None:
        found = _rational_roots_by_isolation(q)
    return sorted(roots + found)


# negative real roots ---------------------------------------------------------


@dataclass(frozen=True)
class NegRootIsolation:
    exact_rational_roots: tuple[BigRat, ...] = ()
    irrational_intervals: tuple[tuple[BigRat, BigRat], ...] = ()
    total_negative_count: int = 0

    def to_json(self) -> dict:
        return {
            "exact": [str(r) for r in self.exact_rational_roots],
            "intervals": [[str(a), str(b)] for a, b in self.irrational_intervals],
            "count": self.total_negative_count,
        }


def negative_real_roots(p: IntPoly) -> NegRootIsolation:
    """Account for every distinct root of ``p`` in (-inf, 0).

    Rational roots are listed exactly.  The others get disjoint rational
    intervals (lo, hi) with lo < hi < 0, each holding exactly one root.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    _, q = p.strip_x()
    if q.degree <= 0:
        return NegRootIsolation()
    q = square_free(q)
    exact = [r for r in rational_roots(q) if r < 0]
    rest = q
    for r in exact:
        rest = divexact(rest, IntPoly((-r.numerator, r.denominator)))
    intervals: list[tuple[Fraction, Fraction]] = []
    if rest.degree >= 1:
        chain = sturm_chain(rest)
        lo = -cauchy_bound(rest)
        zero = Fraction(0)
        count = count_roots(chain, lo, zero)
        if count:
            _isolate(rest, chain, lo, zero, count, intervals, strictly_negative=True)
    return NegRootIsolation(tuple(exact), tuple(intervals), len(exact) + len(intervals))


def is_rational_square(r: Fraction) -> Fraction | None:
    """Rational square root of ``r`` if it has one."""
    if r < 0:
        return None
    a, b = r.numerator, r.denominator
    sa, sb = isqrt(a), isqrt(b)
    if sa * sa == a and sb * sb == b:
        return Fraction(sa, sb)
    return None
