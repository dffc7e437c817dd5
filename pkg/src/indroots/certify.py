"""Deciding whether a polynomial has purely imaginary roots.

p(bi) = 0 for real b != 0 exactly when p_even and p_odd share the root
-b**2, so the question reduces to negative real roots of
gcd(p_even, p_odd).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    GaussRat,
    I,
    IntPoly,
    NegRootIsolation,
    is_rational_square,
    negative_real_roots,
    poly_gcd,
    rational_roots,
)
from .errors import NotIndependencePolynomialError

NONE = "none"
EXISTS = "exists"


@dataclass(frozen=True)
class ResidueProfile:
    """Coefficient totals by index mod 4."""

    c0: int
    c1: int
    c2: int
    c3: int

    @property
    def total(self) -> int:
        return self.c0 + self.c1 + self.c2 + self.c3

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)


def residue_profile(p: IntPoly) -> ResidueProfile:
    c = [0, 0, 0, 0]
    for k, a in enumerate(p.coeffs):
        c[k & 3] += a
    return ResidueProfile(*c)


def profile_balanced(pr: ResidueProfile) -> bool:
    """True iff the polynomial vanishes at i."""
    return pr.c0 == pr.c2 and pr.c1 == pr.c3


@dataclass(frozen=True)
class ImaginaryRootCertificate:
    verdict: str
    gcd_poly: IntPoly
    negative_roots: NegRootIsolation
    rational_imaginary_roots: tuple[Fraction, ...]
    confirmations: tuple[tuple[Fraction, GaussRat], ...]
    balanced_mod4: bool

    @property
    def exists(self) -> bool:
        return self.verdict == EXISTS

    @property
    def irrational_candidate(self) -> bool:
        """Some root -b**2 of the gcd has no rational b."""
        return self.negative_roots.total_negative_count > len(self.rational_imaginary_roots)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "irrational_candidate": self.irrational_candidate,
            "gcd": self.gcd_poly.to_json(),
            "negative_roots": self.negative_roots.to_json(),
            "rational_b": [str(b) for b in self.rational_imaginary_roots],
            "balanced_mod4": self.balanced_mod4,
        }


def _check_independence_candidate(p: IntPoly) -> None:
    if p[0] != 1:
        raise NotIndependencePolynomialError(
            f"constant term is {p[0]}, but every independence polynomial starts with 1"
        )


def certify_imaginary(p: IntPoly) -> ImaginaryRootCertificate:
    _check_independence_candidate(p)
    even, odd = p.even_odd_split()
    g = poly_gcd(even, odd)
    neg = negative_real_roots(g)

    rational_b = []
    confirmations = []
    for r in neg.exact_rational_roots:
        b = is_rational_square(-r)
        if b is None:
            continue
        value = p.eval_gauss(GaussRat(0, b))
        if not value.is_zero():
            # gcd and direct evaluation disagree: an arithmetic bug, not a verdict
            raise AssertionError(f"gcd root {r} but p({b}i) = {value}")
        rational_b.append(b)
        confirmations.append((b, value))

    return ImaginaryRootCertificate(
        verdict=EXISTS if neg.total_negative_count else NONE,
        gcd_poly=g,
        negative_roots=neg,
        rational_imaginary_roots=tuple(sorted(rational_b)),
        confirmations=tuple(confirmations),
        balanced_mod4=profile_balanced(residue_profile(p)),
    )


def has_imaginary_roots(p: IntPoly) -> bool:
    """Cheap yes/no form of :func:`certify_imaginary` for scanning."""
    _check_independence_candidate(p)
    even, odd = p.even_odd_split()
    g = poly_gcd(even, odd)
    if g.degree < 1:
        return False
    return negative_real_roots(g).total_negative_count > 0


def rational_imaginary_classification(p: IntPoly) -> list[Fraction]:
    """Every rational b > 0 with p(+-bi) = 0."""
    bs = list(certify_imaginary(p).rational_imaginary_roots)
    for b in bs:
        if b.numerator != 1:
            raise AssertionError(f"rational imaginary root {b}i has numerator != 1")
    return bs


def even_part_rational_roots_in_unit_range(p: IntPoly) -> bool:
    """Every rational root r of p_even satisfies -1 <= r < 0."""
    _check_independence_candidate(p)
    even, _ = p.even_odd_split()
    if even.degree < 1:
        return True
    return all(-1 <= r < 0 for r in rational_roots(even))


def assert_alpha_le_3_clean(p: IntPoly) -> bool:
    if p.degree > 3:
        raise ValueError(f"degree {p.degree} > 3")
    return certify_imaginary(p).verdict == NONE


def value_at_i(p: IntPoly) -> GaussRat:
    return p.eval_gauss(I)
