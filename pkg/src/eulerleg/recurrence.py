"""Legendre polynomials from the three-term recurrence.

    (n+1) P_{n+1}(t) = (2n+1) t P_n(t) - n P_{n-1}(t),   P_0 = 1, P_1 = t

plus the artanh-primitive solve, an independent exact route to P_n(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, DomainError
from .exactcore import RationalLike, RationalPolynomial, as_rational

__all__ = [
    "legendre_poly",
    "legendre_eval",
    "legendre_eval_with_derivative",
    "legendre_and_derivative_array",
    "PrimitiveSolveResult",
    "primitive_solve",
]


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError("n must be an integer")
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def _legendre_poly_cached(n: int) -> RationalPolynomial:
    if n == 0:
        return RationalPolynomial.constant(1)
    if n == 1:
        return RationalPolynomial.monomial(1)
    t = RationalPolynomial.monomial(1)
    prev, cur = _legendre_poly_cached(n - 2), _legendre_poly_cached(n - 1)
    k = n - 1
    return (t * cur * (2 * k + 1) - prev * k) * Fraction(1, k + 1)


def legendre_poly(n: int) -> RationalPolynomial:
    """Exact P_n as a polynomial in t."""
    _check_n(n)
    # fill the cache bottom-up so deep n never recurses far
    for k in range(0, n, 64):
        _legendre_poly_cached(k)
    return _legendre_poly_cached(int(n))


def legendre_eval(n: int, t: RationalLike) -> Fraction:
    """Exact P_n(t) by the scalar recurrence, O(n) rational operations."""
    _check_n(n)
    t = as_rational(t)
    prev, cur = Fraction(1), t
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * t * cur - k * prev) / (k + 1)
    return cur


def legendre_and_derivative_array(n: int, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized float (P_n(x), P_n'(x)).

    Interior points use (1 - x^2) P_n' = n (P_{n-1} - x P_n); at x = +-1 the
    exact endpoint derivative (+-1)^{n-1} n(n+1)/2 is used.
    """
    _check_n(n)
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.ones_like(x), np.zeros_like(x)
    prev = np.ones_like(x)
    cur = x.copy()
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    one_m = 1.0 - x * x
    at_end = one_m == 0.0
    safe = np.where(at_end, 1.0, one_m)
    dp = n * (prev - x * cur) / safe
    if np.any(at_end):
        end_val = n * (n + 1) / 2.0 * np.sign(x) ** (n - 1)
        dp = np.where(at_end, end_val, dp)
    return cur, dp


def legendre_eval_with_derivative(n: int, x: float) -> tuple[float, float]:
    """Float (P_n(x), P_n'(x)); P_0 has derivative 0."""
    p, dp = legendre_and_derivative_array(n, x)
    return float(p), float(dp)


@dataclass(frozen=True)
class PrimitiveSolveResult:
    """P_n(t) and the companion polynomial Q_n(x) of the artanh primitive.

    d/dx [P artanh((x-t)/s) + Q(x) s] = x^n / s  with  s = sqrt(1 - 2xt + x^2).
    """

    legendre_value: Fraction
    q_coeffs: tuple[Fraction, ...]
    t: Fraction

    @property
    def q(self) -> RationalPolynomial:
        return RationalPolynomial(self.q_coeffs, "x")

    def residual(self) -> RationalPolynomial:
        """P + Q'(1 - 2tx + x^2) + Q(x - t) - x^n; zero when consistent."""
        n = len(self.q_coeffs)
        x = RationalPolynomial.monomial(1, var="x")
        q = self.q
        quad = RationalPolynomial((1, -2 * self.t, 1), "x")
        lhs = q.derivative() * quad + q * (x - self.t) + self.legendre_value
        return lhs - RationalPolynomial.monomial(n, var="x")


def primitive_solve(n: int, t: RationalLike) -> PrimitiveSolveResult:
    """Solve the coefficient-matching system for P_n(t) and Q_n.

    Matching x^m gives  m q_{m-1} - (2m+1) t q_m + (m+1) q_{m+1} = [m == n]
    for m >= 1 and  P - t q_0 + q_1 = [n == 0]  for m = 0. The system is
    triangular from the top, so back-substitution from m = n suffices.
    """
    _check_n(n)
    t = as_rational(t)
    q = [Fraction(0)] * (n + 1)  # q[n] is a zero sentinel
    if n >= 1:
        q[n - 1] = Fraction(1, n)
        for m in range(n - 1, 0, -1):
            q[m - 1] = ((2 * m + 1) * t * q[m] - (m + 1) * q[m + 1]) / m
        p = t * q[0] - q[1]
    else:
        p = Fraction(1)
    res = PrimitiveSolveResult(p, tuple(q[:n]), t)
    if not res.residual().is_zero():
        raise ConsistencyError(f"primitive solve inconsistent at n={n}, t={t}")
    return res
