"""Middle coefficients of trinomial powers (a + b x + c x^2)^n.

B_n, the coefficient of x^n, has generating function
1 / sqrt(1 - 2 b x + (b^2 - 4ac) x^2); with a = (t-1)/2, b = t, c = (t+1)/2
the discriminant is 1 and B_n = P_n(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .exactcore import (
    RationalLike,
    RationalPolynomial,
    as_rational,
    binomial_general,
)

__all__ = [
    "TrinomialParams",
    "central_coeff",
    "central_coeffs_bruteforce",
    "legendre_via_trinomial",
    "gf_coefficients",
    "section22_residual",
    "section22_printed_residual",
]


@dataclass(frozen=True)
class TrinomialParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def disc(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    @classmethod
    def legendre(cls, t: RationalLike) -> TrinomialParams:
        t = as_rational(t)
        return cls((t - 1) / 2, t, (t + 1) / 2)


def central_coeff(params: TrinomialParams, n: int) -> Fraction:
    """B_n = sum_j n!/(j! j! (n-2j)!) a^j b^(n-2j) c^j."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    a, b, c = params.a, params.b, params.c
    total = Fraction(0)
    fn = factorial(n)
    for j in range(n // 2 + 1):
        mult = fn // (factorial(j) ** 2 * factorial(n - 2 * j))
        total += mult * a**j * b ** (n - 2 * j) * c**j
    return total


def central_coeffs_bruteforce(params: TrinomialParams, count: int) -> list[Fraction]:
    """B_0 .. B_{count-1} by literally multiplying out (a + bx + cx^2)^n."""
    tri = RationalPolynomial((params.a, params.b, params.c), "x")
    out = []
    power = RationalPolynomial.constant(1, "x")
    for n in range(count):
        out.append(power.coeff(n))
        power = power * tri
    return out


def _mul_truncated(p: list, q: list, keep: int, zero) -> list:
    out = [zero] * min(keep, len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if i >= keep:
            break
        for j, b in enumerate(q):
            if i + j >= keep:
                break
            out[i + j] = out[i + j] + a * b
    return out


def legendre_via_trinomial(n: int) -> RationalPolynomial:
    """P_n(t) as the x^n coefficient of ((t-1)/2 + t x + (t+1)/2 x^2)^n.

    The power is expanded as a polynomial in x whose coefficients are
    polynomials in t; terms above x^n are dropped as they appear.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    half = Fraction(1, 2)
    tri = [
        RationalPolynomial((-half, half)),
        RationalPolynomial((0, 1)),
        RationalPolynomial((half, half)),
    ]
    zero = RationalPolynomial(())
    acc = [RationalPolynomial.constant(1)]
    base = tri
    k = n
    # binary powering, truncated at x^n
    while k:
        if k & 1:
            acc = _mul_truncated(acc, base, n + 1, zero)
        k >>= 1
        if k:
            base = _mul_truncated(base, base, n + 1, zero)
    return acc[n] if len(acc) > n else zero


def gf_coefficients(b: RationalLike, disc: RationalLike, count: int) -> list[Fraction]:
    """Taylor coefficients of (1 - 2bx + disc x^2)^(-1/2), first ``count`` terms.

    Composes the binomial series of (1+u)^(-1/2) with u = -2bx + disc x^2,
    truncating every intermediate series at ``count`` terms.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    b, disc = as_rational(b), as_rational(disc)
    u = [Fraction(0), -2 * b, disc][:count]
    result = [Fraction(0)] * count
    upow = [Fraction(1)]
    # u^m starts at x^m, so m < count terms suffice
    for m in range(count):
        w = binomial_general(Fraction(-1, 2), m)
        for i, c in enumerate(upow):
            result[i] += w * c
        upow = _mul_truncated(upow, u, count, Fraction(0))
    return result


def section22_residual(params: TrinomialParams, n: int) -> Fraction:
    """n B_n - (2n-1) b B_{n-1} + (n-1)(b^2 - 4ac) B_{n-2}; identically zero."""
    if n < 2:
        raise ValueError("relation needs n >= 2")
    bn, bn1, bn2 = (central_coeff(params, k) for k in (n, n - 1, n - 2))
    return n * bn - (2 * n - 1) * params.b * bn1 + (n - 1) * params.disc * bn2


def section22_printed_residual(params: TrinomialParams, n: int) -> Fraction:
    """r - b q - (n-1)/n (b q - p) with r, q, p = B_n, B_{n-1}, B_{n-2}.

    Only vanishes under the normalization b^2 - 4ac = 1.
    """
    if n < 2:
        raise ValueError("relation needs n >= 2")
    r, q, p = (central_coeff(params, k) for k in (n, n - 1, n - 2))
    b = params.b
    return r - b * q - Fraction(n - 1, n) * (b * q - p)
