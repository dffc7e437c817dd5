import decimal
import random
from fractions import Fraction
from math import isqrt

import pytest
import sympy

from indroots.arith import (
    IntPoly,
    divexact,
    is_rational_square,
    negative_real_roots,
    one_plus_x_pow,
    poly_gcd,
    rational_roots,
    square_free,
    sturm_chain,
)
from indroots.arith import roots as R

x_sym = sympy.Symbol("x")
X = IntPoly.x()


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x_sym)


def from_sympy(q) -> IntPoly:
    return IntPoly(int(c) for c in reversed(q.all_coeffs()))


def normalise(q) -> IntPoly:
    p = from_sympy(q)
    return p.primitive() if not p.is_zero() else p


def test_gcd_example():
    even = IntPoly((1, 15, 15, 1))
    odd = IntPoly((14, 20, 6))
    assert poly_gcd(even, odd) == X + 1
    p = IntPoly((-4, 0, 6))
    assert poly_gcd(p, IntPoly(())) == IntPoly((-2, 0, 3))
    with pytest.raises(ValueError):
        poly_gcd(IntPoly(()), IntPoly(()))


def test_gcd_against_sympy():
    rng = random.Random(11)
    for _ in range(300):
        common = IntPoly(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
        a = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(1, 7))) * common
        b = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(1, 7))) * common
        if a.is_zero() and b.is_zero():
            continue
        want = normalise(sympy.gcd(to_sympy(a), to_sympy(b)))
        assert poly_gcd(a, b) == want


def test_gcd_with_huge_coefficients():
    f = IntPoly((10**30 + 7, 3, 10**25))
    a = f * IntPoly((1, 10**20, 5))
    b = f * IntPoly((-3, 0, 0, 10**18))
    g = poly_gcd(a, b)
    assert g == f.primitive()
    assert divexact(a, g) * g == a


def test_divexact_rejects_inexact():
    with pytest.raises(ArithmeticError):
        divexact(IntPoly((1, 0, 1)), IntPoly((1, 1)))


def test_square_free():
    p = (X + 1).pow(3) * (X * 2 + 3)
    assert square_free(p) == (X + 1) * (X * 2 + 3)


def test_negative_roots_examples():
    r = negative_real_roots(X + 1)
    assert r.exact_rational_roots == (Fraction(-1),) and r.total_negative_count == 1

    r = negative_real_roots(IntPoly((1, 14, 1)))
    assert r.exact_rational_roots == () and r.total_negative_count == 2
    for lo, hi in r.irrational_intervals:
        assert lo < hi < 0
        assert IntPoly((1, 14, 1)).sign_at(lo) * IntPoly((1, 14, 1)).sign_at(hi) < 0
    assert negative_real_roots(IntPoly((1, 0, 1))).total_negative_count == 0


def test_quadratic_intervals_bracket_formula_roots():
    p = IntPoly((1, 14, 1))
    r = negative_real_roots(p)
    decimal.getcontext().prec = 60
    s = decimal.Decimal(48).sqrt()
    exact = sorted([-7 - s, -7 + s])
    ivs = sorted(r.irrational_intervals)
    for (lo, hi), root in zip(ivs, exact):
        assert decimal.Decimal(lo.numerator) / lo.denominator < root < decimal.Decimal(hi.numerator) / hi.denominator


def test_rational_roots_examples():
    assert rational_roots(IntPoly((1, 15, 15, 1))) == [Fraction(-1)]
    assert rational_roots(IntPoly((1, 2))) == [Fraction(-1, 2)]
    assert rational_roots(IntPoly((1, 14, 1))) == []
    assert rational_roots(X * X * (X - 3)) == [Fraction(0), Fraction(3)]
    with pytest.raises(ValueError):
        rational_roots(IntPoly(()))
    with pytest.raises(ValueError):
        negative_real_roots(IntPoly(()))


def test_rational_roots_against_sympy_and_isolation():
    rng = random.Random(3)
    for _ in range(150):
        p = IntPoly((1,))
        for _ in range(rng.randint(1, 4)):
            p = p * IntPoly((rng.randint(-9, 9), rng.randint(1, 9)))
        p = p * IntPoly(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
        if p.is_zero():
            continue
        want = sorted({Fraction(int(sympy.fraction(r)[0]), int(sympy.fraction(r)[1]))
                       for r in sympy.roots(to_sympy(p), filter="Q").keys()})
        assert rational_roots(p) == want
        k, q = p.strip_x()
        if q.degree > 0:
            q = square_free(q)
            assert R._rational_roots_by_isolation(q) == R._rational_roots_by_divisors(q)


def test_rational_roots_large_leading_coefficient():
    big = 10**40 + 1
    p = IntPoly((3, big)) * IntPoly((-7, 10**35)) * IntPoly((1, 0, 1))
    assert rational_roots(p) == sorted([Fraction(-3, big), Fraction(7, 10**35)])


def test_real_root_counts_against_sympy_200():
    rng = random.Random(200)
    for _ in range(200):
        p = IntPoly(rng.randint(-30, 30) for _ in range(rng.randint(2, 9)))
        if p.degree < 1:
            continue
        want = sum(1 for r in set(sympy.Poly(to_sympy(p)).real_roots()) if r < 0)
        got = negative_real_roots(p)
        assert got.total_negative_count == want
        assert got.total_negative_count == len(got.exact_rational_roots) + len(got.irrational_intervals)
        for lo, hi in got.irrational_intervals:
            assert lo < hi < 0


def test_sturm_chain_counts_all_real_roots():
    p = (X - 2) * (X + 3) * IntPoly((-2, 0, 1))
    chain = sturm_chain(p)
    assert R.count_roots(chain, None, Fraction(100)) == 4
    assert R.count_roots(chain, Fraction(0), Fraction(100)) == 2
    assert R.count_roots(chain, Fraction(-10), Fraction(0)) == 2


def test_is_rational_square():
    assert is_rational_square(Fraction(9, 4)) == Fraction(3, 2)
    assert is_rational_square(Fraction(2)) is None
    assert is_rational_square(Fraction(-1)) is None
    n = 10**30 + 12345
    assert is_rational_square(Fraction(n * n, 49)) == Fraction(n, 7)
    assert isqrt(n * n) == n


def test_high_multiplicity():
    p = one_plus_x_pow(40)
    r = negative_real_roots(p)
    assert r.exact_rational_roots == (Fraction(-1),) and r.total_negative_count == 1
