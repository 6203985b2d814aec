from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerleg.errors import DomainError
from eulerleg.recurrence import legendre_eval, legendre_poly
from eulerleg.trinomial import (
    TrinomialParams,
    central_coeff,
    central_coeffs_bruteforce,
    gf_coefficients,
    legendre_via_trinomial,
    section22_printed_residual,
    section22_residual,
)

from oracles import TABLE1, eval_coeffs, trinomial_middle_bruteforce

small_q = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
triples = st.builds(TrinomialParams, small_q, small_q, small_q)

# A002426 from enumerating every term of (1 + x + x^2)^n
A002426 = [trinomial_middle_bruteforce(1, 1, 1, n) for n in range(10)]


def test_bruteforce_sequence_frozen():
    assert A002426 == [1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139]


def test_central_coeff_examples():
    assert central_coeff(TrinomialParams(1, 1, 1), 4) == 19
    assert central_coeff(TrinomialParams(Fraction(2, 3), -5, 7), 0) == 1
    assert central_coeff(TrinomialParams(0, 1, Fraction(-13, 4)), 5) == 1
    with pytest.raises(DomainError):
        central_coeff(TrinomialParams(1, 1, 1), -1)


@settings(max_examples=25, deadline=None)
@given(triples, st.integers(0, 7))
def test_central_coeff_vs_enumeration(p, n):
    assert central_coeff(p, n) == trinomial_middle_bruteforce(p.a, p.b, p.c, n)


def test_central_coeff_vs_repeated_product():
    p = TrinomialParams(Fraction(-1, 3), Fraction(5, 2), 2)
    assert central_coeffs_bruteforce(p, 14) == [central_coeff(p, n) for n in range(14)]


@pytest.mark.parametrize("n", range(8))
def test_trinomial_definition_table(n):
    assert legendre_via_trinomial(n).coeffs == TABLE1[n]


def test_trinomial_definition_up_to_15():
    for n in range(16):
        assert legendre_via_trinomial(n) == legendre_poly(n)


def test_gf_examples():
    assert gf_coefficients(2, 1, 3) == [1, 2, Fraction(11, 2)]
    assert [eval_coeffs(TABLE1[k], 2) for k in range(3)] == [1, 2, Fraction(11, 2)]
    assert gf_coefficients(0, 0, 4) == [1, 0, 0, 0]
    assert gf_coefficients(1, -3, 6) == [1, 1, 3, 7, 19, 51]


def test_gf_against_symbolic_series():
    x, t = sympy.symbols("x t")
    series = sympy.series(1 / sympy.sqrt(1 - 2 * x * t + x**2), x, 0, 8).removeO()
    for tv in (Fraction(1, 3), Fraction(-5, 2)):
        ours = gf_coefficients(tv, 1, 8)
        for k in range(8):
            ref = sympy.Rational(series.coeff(x, k).subs(t, sympy.Rational(tv.numerator, tv.denominator)))
            assert ours[k] == Fraction(int(ref.p), int(ref.q))


@settings(max_examples=5, deadline=None)
@given(triples)
def test_gf_matches_central_coeffs(p):
    assert gf_coefficients(p.b, p.disc, 12) == [central_coeff(p, k) for k in range(12)]


@pytest.mark.parametrize("tv", [Fraction(-3), Fraction(1, 7), Fraction(1), Fraction(9, 4)])
def test_gf_disc1_is_legendre(tv):
    assert gf_coefficients(tv, 1, 16) == [legendre_eval(k, tv) for k in range(16)]


def test_section22_examples():
    ones = TrinomialParams(1, 1, 1)
    assert section22_residual(ones, 5) == 0
    assert 5 * 51 == 9 * 19 + 3 * 4 * 7
    assert section22_residual(TrinomialParams.legendre(3), 4) == 0
    assert section22_residual(TrinomialParams(0, 1, 0), 7) == 0


@settings(max_examples=10, deadline=None)
@given(triples)
def test_section22_generalized_vanishes(p):
    for n in range(2, 13):
        assert section22_residual(p, n) == 0


def test_section22_printed_form_needs_unit_discriminant():
    ones = TrinomialParams(1, 1, 1)
    # as printed, the relation fails for a = b = c = 1 ...
    assert section22_printed_residual(ones, 5) != 0
    # ... and holds once b^2 - 4ac = 1
    for tv in (Fraction(-2), Fraction(1, 2), Fraction(3)):
        p = TrinomialParams.legendre(tv)
        assert p.disc == 1
        for n in range(2, 13):
            assert section22_printed_residual(p, n) == 0
