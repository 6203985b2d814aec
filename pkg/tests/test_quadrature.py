import math

import numpy as np
import pytest

from eulerleg.errors import ToleranceNotReached
from eulerleg.quadrature import (
    RuleKind,
    gauss_chebyshev_rule,
    gauss_legendre_rule,
    integrate_to_tolerance,
)
from eulerleg.recurrence import legendre_and_derivative_array


def test_gl_small():
    r = gauss_legendre_rule(1)
    assert r.nodes.tolist() == [0.0] and r.weights.tolist() == pytest.approx([2.0], abs=1e-15)
    r = gauss_legendre_rule(2)
    assert r.nodes == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], abs=1e-15)
    assert r.weights == pytest.approx([1.0, 1.0], abs=1e-15)


def test_gl_exactness_t8():
    r = gauss_legendre_rule(5)
    assert abs(r.apply(r.nodes**8) - 2 / 9) < 1e-13


@pytest.mark.parametrize("m", range(1, 21))
def test_gl_monomials(m):
    r = gauss_legendre_rule(m)
    for d in range(2 * m):
        exact = 2 / (d + 1) if d % 2 == 0 else 0.0
        assert abs(r.apply(r.nodes**d) - exact) < 1e-12


@pytest.mark.parametrize("m", [1, 2, 3, 7, 16, 64, 512, 4096])
def test_gl_invariants(m):
    r = gauss_legendre_rule(m)
    assert len(r.nodes) == len(r.weights) == m
    assert np.all(np.diff(r.nodes) > 0)
    assert np.all(r.weights > 0)
    assert np.all(np.abs(r.nodes) < 1)
    assert abs(r.weights.sum() - 2) < 1e-13
    assert np.max(np.abs(r.nodes + r.nodes[::-1])) < 1e-14
    p, dp = legendre_and_derivative_array(m, r.nodes)
    if m <= 32:
        assert np.max(np.abs(p)) < 1e-14
    # beyond that |P_m| at the nearest double to a root exceeds 1e-14;
    # require the remaining Newton step to be a few ulp instead
    assert np.max(np.abs(p / dp) / np.spacing(np.abs(r.nodes) + 1e-300)) < 8


def test_gc_small():
    r = gauss_chebyshev_rule(1)
    assert r.nodes == pytest.approx([0.0], abs=1e-16) and r.weights.tolist() == [math.pi]
    r = gauss_chebyshev_rule(2)
    assert r.nodes == pytest.approx([-math.sqrt(2) / 2, math.sqrt(2) / 2], abs=1e-15)
    r = gauss_chebyshev_rule(3)
    assert abs(r.apply(r.nodes**2) - math.pi / 2) < 1e-14


@pytest.mark.parametrize("m", range(1, 21))
def test_gc_even_moments(m):
    r = gauss_chebyshev_rule(m)
    assert abs(r.weights.sum() - math.pi) < 1e-13
    assert np.max(np.abs(r.nodes + r.nodes[::-1])) < 1e-14
    for j in range(m):
        # int u^(2j) / sqrt(1-u^2) = pi (2j)! / (4^j j!^2)
        exact = math.pi * math.comb(2 * j, j) / 4**j
        assert abs(r.apply(r.nodes ** (2 * j)) - exact) < 1e-12


def test_integrate_examples():
    v, _ = integrate_to_tolerance(lambda x: np.ones_like(x), 0, math.pi)
    assert abs(v - math.pi) < 1e-13
    v, _ = integrate_to_tolerance(np.cos, 0, math.pi)
    assert abs(v) < 1e-13
    v, err = integrate_to_tolerance(lambda p: 1 / (1 + 0.25 - 2 * 0.5 * np.cos(p)), 0, math.pi)
    assert abs(v - 4 * math.pi / 3) < 1e-12
    assert err < 1e-12


def test_integrate_complex():
    v, _ = integrate_to_tolerance(lambda p: np.exp(2j * p), 0, math.pi / 2)
    assert abs(v - 1j) < 1e-13


def test_integrate_chebyshev_interval():
    # int_0^2 x^2 / sqrt(x (2 - x)) dx = 3 pi / 2
    v, _ = integrate_to_tolerance(lambda x: x**2, 0.0, 2.0, kind="gauss-chebyshev-1")
    assert abs(v - 1.5 * math.pi) < 1e-13
    assert RuleKind("gauss-chebyshev-1") is RuleKind.GAUSS_CHEBYSHEV_1


def test_integrate_non_convergence():
    with pytest.raises(ToleranceNotReached) as exc:
        integrate_to_tolerance(lambda x: np.sign(x - 0.1234567), -1, 1, tol=1e-15)
    assert exc.value.value is not None


def test_rules_are_readonly():
    r = gauss_legendre_rule(4)
    with pytest.raises(ValueError):
        r.nodes[0] = 0.0
