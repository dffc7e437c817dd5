"""Dense univariate polynomials over the integers."""
from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..errors import DegreeGuardError
from .gaussian import GaussRat

DEFAULT_DEGREE_GUARD = 10**6
GUARD_ENV = "INDROOTS_DEGREE_GUARD"


def degree_guard() -> int:
    """Maximum number of coefficients any operation may produce."""
    raw = os.environ.get(GUARD_ENV)
    if raw:
        return int(raw)
    return DEFAULT_DEGREE_GUARD


def _guard(ncoeffs: int, what: str) -> None:
    limit = degree_guard()
    if ncoeffs > limit:
        raise DegreeGuardError(
            f"{what} needs {ncoeffs} coefficients, above the degree guard {limit} "
            f"(set {GUARD_ENV} to raise it)"
        )


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "IntPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "IntPoly":
        return cls(int(a) for a in data)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    # basic accessors

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = IntPoly._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for k, v in enumerate(b):
            c[k] += v
        return IntPoly._raw(tuple(_trim(c)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            o = IntPoly._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return IntPoly._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly._raw(())
            return IntPoly._raw(tuple(a * other for a in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly._raw(())
        _guard(len(a) + len(b) - 1, "product")
        c = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] += ai * bj
        return IntPoly._raw(tuple(_trim(c)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return self.pow(e)

    def pow(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        if e == 0:
            return IntPoly._raw((1,))
        if self.degree > 0:
            _guard(self.degree * e + 1, "power")
        result = IntPoly._raw((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def compose(self, q: "IntPoly") -> "IntPoly":
        """``self(q(x))`` by Horner's rule."""
        q = IntPoly._coerce(q)
        if self.degree > 0 and q.degree > 0:
            _guard(self.degree * q.degree + 1, "composition")
        result = IntPoly._raw(())
        for a in reversed(self.coeffs):
            result = result * q + a
        return result

    def shift_x(self, k: int) -> "IntPoly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        _guard(len(self.coeffs) + k, "shift")
        return IntPoly._raw((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    # content and normal forms

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        if g == 1:
            return self
        return IntPoly._raw(tuple(a // g for a in self.coeffs))

    def strip_x(self) -> tuple[int, "IntPoly"]:
        """Return ``(k, q)`` with ``self = x**k * q`` and ``q(0) != 0``."""
        c = self.coeffs
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        return k, IntPoly._raw(c[k:])

    def even_odd_split(self) -> tuple["IntPoly", "IntPoly"]:
        return IntPoly(self.coeffs[0::2]), IntPoly(self.coeffs[1::2])

    # evaluation

    def eval_int(self, t: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def eval_num(self, num: int, den: int) -> int:
        """``den**deg * self(num/den)``, an integer with the same sign when den > 0."""
        acc = 0
        dp = 1
        for a in reversed(self.coeffs):
            acc = acc * num + a * dp
            dp *= den
        return acc

    def eval_rat(self, t) -> Fraction:
        t = Fraction(t)
        if not self.coeffs:
            return Fraction(0)
        num = self.eval_num(t.numerator, t.denominator)
        return Fraction(num, t.denominator ** self.degree)

    def sign_at(self, t: Fraction) -> int:
        if not self.coeffs:
            return 0
        v = self.eval_num(t.numerator, t.denominator)
        return (v > 0) - (v < 0)

    def eval_gauss(self, z) -> GaussRat:
        z = GaussRat.coerce(z)
        r = z.re.denominator * z.im.denominator // gcd(z.re.denominator, z.im.denominator)
        p = z.re.numerator * (r // z.re.denominator)
        q = z.im.numerator * (r // z.im.denominator)
        # Horner over Gaussian integers on (p + qi)/r with the common denominator cleared
        ar = ai = 0
        rp = 1
        for a in reversed(self.coeffs):
            ar, ai = ar * p - ai * q + a * rp, ar * q + ai * p
            rp *= r
        den = r ** self.degree if self.coeffs else 1
        return GaussRat(Fraction(ar, den), Fraction(ai, den))

    def __call__(self, t):
        if isinstance(t, GaussRat):
            return self.eval_gauss(t)
        return self.eval_rat(t)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def pow(p: IntPoly, e: int) -> IntPoly:  # noqa: A001
    return p.pow(e)


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    return p.compose(q)


def even_odd_split(p: IntPoly) -> tuple[IntPoly, IntPoly]:
    """``(p_even, p_odd)`` with ``p(x) = p_even(x**2) + x * p_odd(x**2)``."""
    return p.even_odd_split()


def eval_rat(p: IntPoly, t) -> Fraction:
    return p.eval_rat(t)


def eval_gauss(p: IntPoly, z) -> GaussRat:
    return p.eval_gauss(z)


def one_plus_x_pow(n: int, scale: int = 1) -> IntPoly:
    """``(1 + scale*x)**n`` from the binomial coefficients directly."""
    if n < 0:
        raise ValueError("negative exponent")
    _guard(n + 1, "binomial power")
    c = [1] * (n + 1)
    s = 1
    b = 1
    for k in range(1, n + 1):
        b = b * (n - k + 1) // k
        s *= scale
        c[k] = b * s
    return IntPoly._raw(tuple(_trim(c)))
