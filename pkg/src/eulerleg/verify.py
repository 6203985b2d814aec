"""Identity and cross-representation checks over fixed parameter grids.

Each suite returns a list of :class:`Check` records sorted by (name, params).
Floating comparisons against an exact value y use |x - y| <= tol * max(1, |y|);
``tol`` defaults to 1e-9 and the stricter suites (E606 recurrence, Euler
transformation, imaginary residues) use tol / 10.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactcore import RationalPolynomial, poly_eval
from .hypergeom import HypergeometricParams, euler_transform_residual
from .integrals import (
    AFamilyPoint,
    E606Params,
    a_family_difference_residual,
    a_family_direct,
    a_family_explicit,
    a_family_functional_residual,
    e606_G_mod,
    e606_legendre,
    e606_recurrence_residual,
    jacobi_relation_residual,
    laplace_negative_estimate,
    laplace_positive_estimate,
)
from .recurrence import legendre_eval, legendre_poly, primitive_solve
from .trinomial import (
    TrinomialParams,
    central_coeff,
    central_coeffs_bruteforce,
    gf_coefficients,
    legendre_via_trinomial,
    section22_printed_residual,
    section22_residual,
)

DEFAULT_TOL = 1e-9
SUITES = ("recurrence", "jacobi", "a-family", "e606", "euler-transform", "section22")

LAPLACE_T = (-0.9, -0.5, 0.0, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0)
E606_T = (1.1, 1.5, 2.0, 3.0)
A_VALUES = (0.3, -0.3, 0.7)
RATIONAL_T = tuple(
    Fraction(s) for s in ("-3", "-7/5", "-1", "-1/2", "0", "1/3", "3/4", "1", "3/2", "5/2")
)
# sequence A002426 by direct expansion of (1 + x + x^2)^n
CENTRAL_TRINOMIAL = (1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139)
E606_TRIPLES = ((1.0, 1.5, 1.0), (1.0, 3.0, 2.0), (0.5, 1.2, 3.0), (2.0, 5.0, 1.5), (1.5, -4.0, 0.8))
HYP_VALUES = (0.25, 1.25, 2.5)
HYP_X = (0.1, 0.3, 0.5)
SEED = 20240601


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    params: tuple
    residual: float | Fraction
    limit: float
    passed: bool

    def params_str(self) -> str:
        return ",".join(_fmt_param(p) for p in self.params)


def _fmt_param(p) -> str:
    if isinstance(p, float):
        return format(p, ".17g")
    return str(p)


def close(x: float, exact: float, tol: float) -> tuple[float, bool]:
    """Scaled deviation |x - exact| / max(1, |exact|) and whether it is < tol."""
    dev = abs(x - exact) / max(1.0, abs(exact))
    return dev, dev < tol


def _exact_check(suite, name, params, residual) -> Check:
    return Check(suite, name, params, residual, 0.0, residual == 0)


def _rel_check(suite, name, params, dev, limit) -> Check:
    return Check(suite, name, params, float(dev), limit, bool(dev < limit))


def suite_recurrence(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "recurrence"
    out = []
    t = RationalPolynomial.monomial(1)
    for n in range(1, 31):
        res = legendre_poly(n + 1) * (n + 1) - t * legendre_poly(n) * (2 * n + 1) + legendre_poly(n - 1) * n
        out.append(_exact_check(s, "three-term-residual", (n,), Fraction(len(res.coeffs))))
    for n in range(31):
        p = legendre_poly(n)
        par = p.compose_neg() - p * (-1) ** n
        out.append(_exact_check(s, "parity", (n,), Fraction(len(par.coeffs))))
        out.append(_exact_check(s, "endpoint+1", (n,), poly_eval(p, 1) - 1))
        out.append(_exact_check(s, "endpoint-1", (n,), poly_eval(p, -1) - (-1) ** n))
    for n in range(16):
        p = legendre_poly(n)
        diff = legendre_via_trinomial(n) - p
        out.append(_exact_check(s, "trinomial=recurrence", (n,), Fraction(len(diff.coeffs))))
    gfs = {tv: gf_coefficients(tv, 1, 16) for tv in RATIONAL_T}
    for n in range(16):
        p = legendre_poly(n)
        for tv in RATIONAL_T:
            ref = poly_eval(p, tv)
            out.append(_exact_check(s, "gf-series=recurrence", (n, tv), gfs[tv][n] - ref))
            out.append(_exact_check(s, "primitive-solve=recurrence", (n, tv),
                                    primitive_solve(n, tv).legendre_value - ref))
            out.append(_exact_check(s, "scalar-eval=poly", (n, tv), legendre_eval(n, tv) - ref))
    return out


def suite_jacobi(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "jacobi"
    out = []
    for t in LAPLACE_T:
        for n in range(16):
            exact = float(legendre_eval(n, Fraction(t)))
            pos = laplace_positive_estimate(n, t)
            neg = laplace_negative_estimate(n, t)
            out.append(_rel_check(s, "laplace-pos=exact", (n, t), close(pos.value, exact, tol)[0], tol))
            out.append(_rel_check(s, "laplace-neg=exact", (n, t), close(neg.value, exact, tol)[0], tol))
            out.append(_rel_check(s, "jacobi-relation", (n, t), jacobi_relation_residual(n, t).relative, tol))
            if abs(t) < 1:
                imag = max(pos.imag, neg.imag)
                out.append(_rel_check(s, "imag-residue", (n, t), imag, tol / 10))
    return out


def suite_a_family(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "a-family"
    out = []
    for a, k, n in itertools.product(A_VALUES, range(5), range(6)):
        r = a_family_explicit(Fraction(str(a)), k, n)
        direct = a_family_direct(AFamilyPoint(a, k, n + 1))
        dev = abs(math.pi * float(r) - direct) / (math.pi * max(1.0, abs(float(r))))
        out.append(_rel_check(s, "explicit-V=direct", (a, k, n), dev, tol))
        if n >= 2:
            out.append(_rel_check(s, "difference-eq", (a, k, n),
                                  a_family_difference_residual(a, k, n).relative, tol))
        out.append(_rel_check(s, "functional-eq", (a, k, n),
                              a_family_functional_residual(a, k, n).relative, tol))
    return out


def suite_e606(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "e606"
    out = []
    for abc in E606_TRIPLES:
        p = E606Params(*abc)
        for n in range(1, 11):
            out.append(_rel_check(s, "recurrence", abc + (n,),
                                  e606_recurrence_residual(p, n).relative, tol / 10))
    for t in E606_T:
        for n in range(16):
            exact = float(legendre_eval(n, Fraction(t)))
            out.append(_rel_check(s, "legendre=exact", (n, t), close(e606_legendre(n, t), exact, tol)[0], tol))
    # x -> lam x:  G~(n; a, b, c) = lam^(n+1) G~(n; a, lam b, lam^2 c)
    lam = 2.0
    a, b, c = E606_TRIPLES[1]
    for n in range(11):
        lhs = e606_G_mod(E606Params(a, b, c), n)
        rhs = lam ** (n + 1) * e606_G_mod(E606Params(a, lam * b, lam * lam * c), n)
        out.append(_rel_check(s, "scale-covariance", (a, b, c, n), abs(lhs - rhs) / abs(lhs), tol / 10))
    return out


def suite_euler_transform(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "euler-transform"
    out = []
    for a, b, c in itertools.product(HYP_VALUES, repeat=3):
        for x in HYP_X:
            r = euler_transform_residual(HypergeometricParams(a, b, c, x))
            out.append(_rel_check(s, "2F1-euler", (a, b, c, x), r, tol / 10))
    return out


def random_triples(count: int = 10, seed: int = SEED) -> list[TrinomialParams]:
    rng = random.Random(seed)

    def q():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 7))

    return [TrinomialParams(q(), q(), q()) for _ in range(count)]


def suite_section22(tol: float = DEFAULT_TOL) -> list[Check]:
    s = "section22"
    out = []
    ones = TrinomialParams(1, 1, 1)
    triples = [ones] + random_triples()
    for p in triples:
        for n in range(2, 13):
            out.append(_exact_check(s, "generalized-relation", (p.a, p.b, p.c, n), section22_residual(p, n)))
    brute = central_coeffs_bruteforce(ones, len(CENTRAL_TRINOMIAL))
    for n, expect in enumerate(CENTRAL_TRINOMIAL):
        out.append(_exact_check(s, "A002426-bruteforce", (n,), brute[n] - expect))
        out.append(_exact_check(s, "A002426-closed-sum", (n,), central_coeff(ones, n) - expect))
    for tv in RATIONAL_T:
        p = TrinomialParams.legendre(tv)
        for n in range(2, 13):
            out.append(_exact_check(s, "printed-relation-disc1", (tv, n), section22_printed_residual(p, n)))
    return out


_SUITES: dict[str, Callable[[float], list[Check]]] = {
    "recurrence": suite_recurrence,
    "jacobi": suite_jacobi,
    "a-family": suite_a_family,
    "e606": suite_e606,
    "euler-transform": suite_euler_transform,
    "section22": suite_section22,
}


def _sort_key(c: Check):
    return (c.suite, c.name, tuple(float(p) for p in c.params))


def run_suite(name: str, tol: float = DEFAULT_TOL) -> list[Check]:
    if name == "all":
        names = SUITES
    elif name in _SUITES:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}")
    checks = []
    for nm in names:
        checks.extend(sorted(_SUITES[nm](tol), key=_sort_key))
    return checks
