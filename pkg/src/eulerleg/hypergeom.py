"""Truncated Gauss hypergeometric series and Euler's transformation."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ToleranceNotReached

__all__ = ["HypergeometricParams", "hyp2f1", "euler_transform_residual"]

MAX_TERMS = 10000


@dataclass(frozen=True)
class HypergeometricParams:
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        if self.c <= 0 and float(self.c).is_integer():
            raise DomainError(f"c must not be zero or a negative integer, got {self.c}")
        if not abs(self.x) < 1:
            raise DomainError(f"need |x| < 1, got {self.x}")

    def euler_partner(self) -> HypergeometricParams:
        return HypergeometricParams(self.c - self.a, self.c - self.b, self.c, self.x)


def hyp2f1(p: HypergeometricParams, tol: float = 1e-15) -> float:
    """sum_m (a)_m (b)_m / (c)_m x^m / m!, stopped after two consecutive
    terms below ``tol`` in magnitude."""
    a, b, c, x = p.a, p.b, p.c, p.x
    term = 1.0
    terms = [term]
    small = 0
    for m in range(MAX_TERMS):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * x
        terms.append(term)
        small = small + 1 if abs(term) < tol else 0
        if small == 2:
            return math.fsum(terms)
    raise ToleranceNotReached(
        f"2F1 series not converged after {MAX_TERMS} terms", math.fsum(terms), abs(term)
    )


def euler_transform_residual(p: HypergeometricParams, tol: float = 1e-15) -> float:
    """|2F1(a,b;c;x) - (1-x)^(c-a-b) 2F1(c-a,c-b;c;x)|."""
    left = hyp2f1(p, tol)
    right = (1.0 - p.x) ** (p.c - p.a - p.b) * hyp2f1(p.euler_partner(), tol)
    return abs(left - right)
