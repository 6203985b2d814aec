"""Exact rational scalars and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator after every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "RationalPolynomial",
    "as_rational",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "binomial_general",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(v: RationalLike) -> Fraction:
    """Coerce an int, Fraction or literal such as ``"3/2"`` or ``"0.3"``."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a rational")
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


def _strip(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial; ``coeffs[i]`` multiplies ``var**i``.

    The zero polynomial has an empty coefficient tuple, so ``degree`` is
    ``len(coeffs) - 1`` in all cases (``-1`` for zero).
    """

    coeffs: tuple[Fraction, ...] = ()
    var: str = "t"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: RationalLike, var: str = "t") -> RationalPolynomial:
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1, var: str = "t") -> RationalPolynomial:
        return cls((0,) * k + (c,), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, v) -> Fraction:
        return poly_eval(self, v)

    def __add__(self, other):
        return poly_add(self, _lift(other, self.var))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return poly_add(self, -_lift(other, self.var))

    def __rsub__(self, other):
        return poly_add(_lift(other, self.var), -self)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            return poly_mul(self, other)
        s = as_rational(other)
        return RationalPolynomial(tuple(s * c for c in self.coeffs), self.var)

    __rmul__ = __mul__

    def derivative(self) -> RationalPolynomial:
        return RationalPolynomial(
            tuple(i * c for i, c in enumerate(self.coeffs) if i > 0), self.var
        )

    def compose_neg(self) -> RationalPolynomial:
        """p(-v)."""
        return RationalPolynomial(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)), self.var
        )

    def __str__(self) -> str:
        return format_poly(self)


def _lift(x, var: str) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x
    return RationalPolynomial.constant(x, var)


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return RationalPolynomial(tuple(p.coeff(i) + q.coeff(i) for i in range(n)), p.var)


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    if p.is_zero() or q.is_zero():
        return RationalPolynomial((), p.var)
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return RationalPolynomial(tuple(out), p.var)


def poly_eval(p: RationalPolynomial, v: RationalLike) -> Fraction:
    """Horner evaluation in exact arithmetic."""
    v = as_rational(v)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def binomial_general(top: RationalLike, k: int) -> Fraction:
    """Falling-factorial binomial ``top (top-1) ... (top-k+1) / k!``.

    Works for any rational ``top``, in particular negative integers.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = as_rational(top)
    num = Fraction(1)
    for i in range(k):
        num = num * (top - i) / (i + 1)
    return num


def _fmt_int_term(c: int, i: int, var: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if i == 0:
        body = str(a)
    else:
        mono = var if i == 1 else f"{var}^{i}"
        body = mono if a == 1 else f"{a}{mono}"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def format_poly(p: RationalPolynomial) -> str:
    """Render with a common denominator, e.g. ``(35t^4 - 30t^2 + 3)/8``."""
    if p.is_zero():
        return "0"
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    parts = []
    for i in range(len(ints) - 1, -1, -1):
        if ints[i] != 0:
            parts.append(_fmt_int_term(ints[i], i, p.var, not parts))
    body = "".join(parts)
    if den == 1:
        return body
    return f"({body})/{den}"


def poly_from_seq(coeffs: Sequence[RationalLike], var: str = "t") -> RationalPolynomial:
    return RationalPolynomial(tuple(coeffs), var)
