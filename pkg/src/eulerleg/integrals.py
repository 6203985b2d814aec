"""Integral representations of P_n(t) and Euler's A-family / E606 integrals.

Conventions
-----------
* Laplace pair: P_n(t) = (1/pi) int_0^pi (t + sqrt(t^2-1) cos phi)^n dphi
  and the same with exponent -n-1.
* A-family: A_n(a, k) = int_0^pi cos(k phi) / Delta^n dphi with
  Delta = 1 - 2a cos phi + a^2; ``n`` is the denominator exponent as written.
* E606: G~(n) = int x^n / sqrt|a^2 - 2bx + cx^2| dx between the roots of the
  quadratic. The complex G(n) equals i G~(n) for the principal branch
  log(-1) = i pi, so P_n(t) = G~(n; 1, t, 1) / pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import ConsistencyError, DomainError
from .exactcore import RationalLike, as_rational, binomial_general
from .quadrature import gauss_chebyshev_rule, integrate_to_tolerance

__all__ = [
    "Estimate",
    "Residual",
    "laplace_positive",
    "laplace_negative",
    "laplace_positive_estimate",
    "laplace_negative_estimate",
    "jacobi_relation_residual",
    "AFamilyPoint",
    "a_family_direct",
    "a_family_explicit",
    "a_family_difference_residual",
    "a_family_functional_residual",
    "E606Params",
    "e606_G_mod",
    "e606_G_mod_estimate",
    "e606_recurrence_residual",
    "e606_legendre",
    "e606_legendre_estimate",
]

DEFAULT_TOL = 1e-12


class Estimate(NamedTuple):
    value: float
    error: float
    imag: float = 0.0  # discarded imaginary part, complex-branch paths only


class Residual(NamedTuple):
    """Absolute residual of an identity and the size of its largest term."""

    value: float
    scale: float

    @property
    def relative(self) -> float:
        return self.value / self.scale if self.scale > 0 else self.value


def _as_float(t) -> float:
    if isinstance(t, (Fraction, str)):
        return float(as_rational(t))
    return float(t)


# -- Laplace pair --------------------------------------------------------


def _laplace(n: int, t, exponent: int, tol: float) -> Estimate:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    t = _as_float(t)
    if abs(t) == 1.0:
        return Estimate(t**n, 0.0)
    if t < -1.0 and exponent < 0:
        # real negative integrand: the integral equals -P_n(t), so reflect
        v = _laplace(n, -t, exponent, tol)
        return Estimate((-1) ** n * v.value, v.error, v.imag)

    if abs(t) > 1.0:
        r = math.sqrt(t * t - 1.0)

        def f(phi):
            return (t + r * np.cos(phi)) ** exponent

    elif exponent >= 0:
        r = math.sqrt(1.0 - t * t)

        def f(phi):
            return (t + 1j * r * np.cos(phi)) ** exponent

    else:
        # Lift the path to phi = s + i*delta*sin(s). The pole of the integrand
        # sits at pi/2 - i*artanh(t), so delta > artanh|t| keeps it below the
        # path and the integral continues P_n analytically from t > 0 to t <= 0.
        r = math.sqrt(1.0 - t * t)
        delta = 1.0 + math.atanh(abs(t))

        def f(s):
            phi = s + 1j * delta * np.sin(s)
            dphi = 1.0 + 1j * delta * np.cos(s)
            return (t + 1j * r * np.cos(phi)) ** exponent * dphi

    value, err = integrate_to_tolerance(f, 0.0, math.pi, tol=tol, rtol=tol)
    value, err = value / math.pi, err / math.pi
    scale = max(1.0, abs(value.real))
    if abs(value.imag) >= tol * scale:
        raise ConsistencyError(
            f"imaginary residue {value.imag:.3g} at n={n}, t={t} exceeds tolerance"
        )
    return Estimate(value.real, max(err, abs(value.imag)), abs(value.imag))


def laplace_positive_estimate(n: int, t, tol: float = DEFAULT_TOL) -> Estimate:
    return _laplace(n, t, n, tol)


def laplace_negative_estimate(n: int, t, tol: float = DEFAULT_TOL) -> Estimate:
    return _laplace(n, t, -n - 1, tol)


def laplace_positive(n: int, t, tol: float = DEFAULT_TOL) -> float:
    """(1/pi) int_0^pi (t + sqrt(t^2-1) cos phi)^n dphi.

    For |t| < 1 the root is i sqrt(1-t^2) and the integral is complex; its
    imaginary part must vanish to within ``tol`` and is dropped.
    """
    return laplace_positive_estimate(n, t, tol).value


def laplace_negative(n: int, t, tol: float = DEFAULT_TOL) -> float:
    """(1/pi) int_0^pi (t + sqrt(t^2-1) cos phi)^(-n-1) dphi.

    On the real path this only reproduces P_n(t) for t > 0 (at t = 0 the
    integrand has a pole on the path). For |t| < 1 the path is deformed into
    the upper half plane, and for t < -1 the reflection P_n(-t) = (-1)^n P_n(t)
    is used.
    """
    return laplace_negative_estimate(n, t, tol).value


def jacobi_relation_residual(n: int, t, tol: float = DEFAULT_TOL) -> Residual:
    """|positive - negative| Laplace integral, scaled by max(1, |P_n(t)|)."""
    pos = laplace_positive_estimate(n, t, tol)
    neg = laplace_negative_estimate(n, t, tol)
    return Residual(abs(pos.value - neg.value), max(1.0, abs(pos.value)))


# -- A-family ------------------------------------------------------------


@dataclass(frozen=True)
class AFamilyPoint:
    a: float
    k: int
    n: int

    def __post_init__(self):
        if not abs(self.a) < 1:
            raise DomainError(f"need |a| < 1, got a={self.a}")
        if self.k < 0:
            raise DomainError("harmonic order k must be nonnegative")


def a_family_direct_estimate(p: AFamilyPoint, tol: float = DEFAULT_TOL) -> Estimate:
    a, k, n = float(p.a), p.k, p.n
    if a == 0.0:
        return Estimate(math.pi if k == 0 else 0.0, 0.0)

    def f(phi):
        return np.cos(k * phi) * (1.0 + a * a - 2.0 * a * np.cos(phi)) ** (-n)

    value, err = integrate_to_tolerance(f, 0.0, math.pi, tol=tol, rtol=tol)
    return Estimate(value.real, err)


def a_family_direct(p: AFamilyPoint, tol: float = DEFAULT_TOL) -> float:
    """Quadrature value of int_0^pi cos(k phi) / Delta^n dphi (any integer n)."""
    return a_family_direct_estimate(p, tol).value


def a_family_explicit(a: RationalLike, k: int, n: int) -> Fraction:
    """Rational r with int_0^pi cos(k phi) / Delta^(n+1) dphi = pi r.

    r = a^k / (1-a^2)^(2n+1) * V,
    V = sum_j C(n+k, k+j) C(n-k, j) a^(2j).

    The sum ends at j = n, where C(n+k, k+j) becomes zero. For k > n the
    factor C(n-k, j) has a negative top and does not truncate the sum.
    """
    a = as_rational(a)
    if not abs(a) < 1:
        raise DomainError(f"need |a| < 1, got a={a}")
    if k < 0 or n < 0:
        raise DomainError("k and n must be nonnegative")
    v = sum(
        (binomial_general(n + k, k + j) * binomial_general(n - k, j) * a ** (2 * j)
         for j in range(n + 1)),
        Fraction(0),
    )
    return a**k / (1 - a * a) ** (2 * n + 1) * v


def a_family_difference_residual(a: float, k: int, n: int, tol: float = DEFAULT_TOL) -> Residual:
    """n(n-1)(1-a^2)^2 A_{n+1} - (n-1)(2n-1)(1+a^2) A_n - (k^2-(n-1)^2) A_{n-1}."""
    if n < 2:
        raise DomainError("difference equation needs n >= 2")
    weights = {
        n + 1: n * (n - 1) * (1 - a * a) ** 2,
        n: -(n - 1) * (2 * n - 1) * (1 + a * a),
        n - 1: -(k * k - (n - 1) ** 2),
    }
    terms = [w * a_family_direct(AFamilyPoint(a, k, m), tol) for m, w in weights.items()]
    # k = 0 integrals bound the cosine-weighted ones; they set the scale
    scale = max(abs(w) * a_family_direct(AFamilyPoint(a, 0, m), tol) for m, w in weights.items())
    return Residual(abs(math.fsum(terms)), max(scale, *map(abs, terms)))


def a_family_functional_residual(a: float, k: int, n: int, tol: float = DEFAULT_TOL) -> Residual:
    """C(n+k,k)(1-a^2)^-n int Delta^n cos - C(k-n-1,k)(1-a^2)^(n+1) int Delta^(-n-1) cos."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    wl = float(binomial_general(n + k, k)) * (1 - a * a) ** (-n)
    wr = float(binomial_general(k - n - 1, k)) * (1 - a * a) ** (n + 1)
    lhs = wl * a_family_direct(AFamilyPoint(a, k, -n), tol)
    rhs = wr * a_family_direct(AFamilyPoint(a, k, n + 1), tol)
    # For k > n both sides vanish, so measure against the k = 0 integrals,
    # which bound |int Delta^m cos(k phi)| from above.
    scale = max(
        abs(wl) * a_family_direct(AFamilyPoint(a, 0, -n), tol),
        abs(wr) * a_family_direct(AFamilyPoint(a, 0, n + 1), tol),
        abs(lhs),
        abs(rhs),
    )
    return Residual(abs(lhs - rhs), scale)


# -- E606 ----------------------------------------------------------------


@dataclass(frozen=True)
class E606Params:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0 and self.c > 0):
            raise DomainError("need a > 0 and c > 0")
        if not self.b * self.b - self.a * self.a * self.c > 0:
            raise DomainError("need b^2 - a^2 c > 0 for real endpoints")

    @property
    def endpoints(self) -> tuple[float, float]:
        root = math.sqrt(self.b**2 - self.a**2 * self.c)
        return (self.b - root) / self.c, (self.b + root) / self.c


def e606_G_mod_estimate(p: E606Params, n: int, tol: float = DEFAULT_TOL) -> Estimate:
    # x = b/c + h u  turns the integral into (1/sqrt c) int (b/c + h u)^n / sqrt(1-u^2) du
    if n < 0:
        raise DomainError("n must be nonnegative")
    centre = p.b / p.c
    h = math.sqrt(p.b * p.b - p.a * p.a * p.c) / p.c
    m = (n + 3) // 2  # ceil((n+2)/2); exact for degree <= 2m-1

    def rule_value(m):
        rule = gauss_chebyshev_rule(m)
        return float(rule.apply((centre + h * rule.nodes) ** n)) / math.sqrt(p.c)

    value = rule_value(m)
    # both rules are exact, so the gap is pure rounding
    err = abs(value - rule_value(m + 1))
    return Estimate(value, err)


def e606_G_mod(p: E606Params, n: int, tol: float = DEFAULT_TOL) -> float:
    """int x^n / sqrt|a^2 - 2bx + cx^2| dx between the roots of the quadratic."""
    return e606_G_mod_estimate(p, n, tol).value


def e606_recurrence_residual(p: E606Params, n: int, tol: float = DEFAULT_TOL) -> Residual:
    """n a^2 G(n-1) - (2n+1) b G(n) + (n+1) c G(n+1), applied to G~."""
    if n < 1:
        raise DomainError("recurrence needs n >= 1")
    g = {m: e606_G_mod(p, m, tol) for m in (n - 1, n, n + 1)}
    terms = (
        n * p.a * p.a * g[n - 1],
        -(2 * n + 1) * p.b * g[n],
        (n + 1) * p.c * g[n + 1],
    )
    return Residual(abs(math.fsum(terms)), max(abs(x) for x in terms))


def e606_legendre_estimate(n: int, t, tol: float = DEFAULT_TOL) -> Estimate:
    t = _as_float(t)
    if not t > 1.0:
        raise DomainError("requires t > 1")
    g = e606_G_mod_estimate(E606Params(1.0, t, 1.0), n, tol)
    return Estimate(g.value / math.pi, g.error / math.pi)


def e606_legendre(n: int, t, tol: float = DEFAULT_TOL) -> float:
    """P_n(t) = G~(n; a=1, b=t, c=1) / pi, i.e. G(n)/log(-1) with log(-1) = i pi."""
    return e606_legendre_estimate(n, t, tol).value
