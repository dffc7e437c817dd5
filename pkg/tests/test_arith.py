import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from indroots.arith import GaussRat, I, IntPoly, compose, even_odd_split, one_plus_x_pow
from indroots.arith.polynomial import degree_guard
from indroots.errors import DegreeGuardError

X = IntPoly.x()
polys = st.lists(st.integers(-50, 50), max_size=9).map(IntPoly)
rats = st.fractions(max_denominator=20).filter(lambda f: abs(f) < 50)

x_sym = sympy.Symbol("x")


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x_sym)


def test_binomial_and_compose_examples():
    assert (X + 1).pow(6) == IntPoly((1, 6, 15, 20, 15, 6, 1))
    p = IntPoly((3, -2, 7))
    assert compose(p, X) == p
    assert compose(IntPoly((1, 0, 1)), X * 2) == IntPoly((1, 0, 4))


def test_trimming_and_degree():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly(()).degree == -1
    assert IntPoly((0,)).is_zero()
    assert IntPoly((5,)).degree == 0


def test_even_odd_examples():
    p = one_plus_x_pow(6) + X * 8
    even, odd = even_odd_split(p)
    assert even == IntPoly((1, 15, 15, 1))
    assert odd == IntPoly((14, 20, 6))
    assert even_odd_split(IntPoly((7,))) == (IntPoly((7,)), IntPoly(()))


def test_gaussian_evaluation_examples():
    assert (one_plus_x_pow(6) + X * 8).eval_gauss(I) == 0
    p = one_plus_x_pow(8) + one_plus_x_pow(6) * 16 - 16
    assert p.eval_gauss(I) == GaussRat(0, -128)
    assert GaussRat(1, 1) ** 6 == GaussRat(0, -8)
    assert IntPoly((9, 4)).eval_rat(0) == 9


def test_gaussrat_field_ops():
    z = GaussRat(Fraction(1, 2), -3)
    w = GaussRat(2, Fraction(5, 7))
    assert (z * w) / w == z
    assert z ** -2 * z ** 2 == 1
    assert z * z.conjugate() == GaussRat(Fraction(1, 4) + 9, 0)
    assert I ** 4 == 1 and I ** 2 == -1
    assert GaussRat(0, Fraction(1, 2)).to_json() == ["0", "1/2"]
    with pytest.raises(ZeroDivisionError):
        z / GaussRat(0, 0)


def test_fraction_canonical():
    f = Fraction(6, -4)
    assert (f.numerator, f.denominator) == (-3, 2)


def test_degree_guard(monkeypatch):
    monkeypatch.setenv("INDROOTS_DEGREE_GUARD", "50")
    assert degree_guard() == 50
    with pytest.raises(DegreeGuardError):
        one_plus_x_pow(60)
    with pytest.raises(DegreeGuardError):
        IntPoly((1, 1)).pow(51)


def test_json_round_trip():
    p = IntPoly((1, -10**40, 3))
    assert IntPoly.from_json(p.to_json()) == p
    assert p.to_json()[1] == str(-10**40)


@given(polys, polys, polys)
def test_ring_axioms_against_sympy(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)
    assert to_sympy(p - q) == to_sympy(p) - to_sympy(q)


@given(polys, polys)
def test_compose_against_sympy(p, q):
    got = compose(p, q)
    assert to_sympy(got) == to_sympy(p).compose(to_sympy(q))


@given(polys, rats)
def test_eval_rat(p, t):
    assert p.eval_rat(t) == sum(Fraction(c) * t**k for k, c in enumerate(p.coeffs))
    sign = (p.eval_rat(t) > 0) - (p.eval_rat(t) < 0)
    assert p.sign_at(t) == sign


def test_even_odd_reconstruction_500_random():
    rng = random.Random(500)
    x2 = X * X
    for _ in range(500):
        p = IntPoly(rng.randint(-10**6, 10**6) for _ in range(rng.randint(0, 15)))
        even, odd = p.even_odd_split()
        assert compose(even, x2) + X * compose(odd, x2) == p


@given(polys, rats)
def test_imaginary_root_iff_even_and_odd_vanish(p, b):
    # p(bi) = p_even(-b^2) + bi * p_odd(-b^2)
    even, odd = p.even_odd_split()
    value = p.eval_gauss(GaussRat(0, b))
    t = -b * b
    assert value == GaussRat(even.eval_rat(t), b * odd.eval_rat(t))
    if b:
        assert value.is_zero() == (even.eval_rat(t) == 0 and odd.eval_rat(t) == 0)


def test_imaginary_root_iff_constructed():
    # (x^2 + 1/4 -> 4x^2+1) times a random factor vanishes at i/2
    rng = random.Random(7)
    for _ in range(50):
        f = IntPoly(rng.randint(-9, 9) for _ in range(rng.randint(1, 6)))
        if f.is_zero():
            continue
        p = IntPoly((1, 0, 4)) * f
        even, odd = p.even_odd_split()
        t = Fraction(-1, 4)
        assert p.eval_gauss(GaussRat(0, Fraction(1, 2))) == 0
        assert even.eval_rat(t) == 0 and odd.eval_rat(t) == 0
