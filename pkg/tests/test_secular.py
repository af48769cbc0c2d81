"""Secular polynomials: corner expansion vs the brute-force exact
determinant, published closed forms, coupling curves, and the symmetry
suite."""

import math
import random
from fractions import Fraction

import pytest

from epspect.exactpoly import RatPoly
from epspect.secular import (
    EvaluationOutsideRealBranch,
    KNOWN_R2_CURVES,
    brute_force_secular,
    check_known_curve,
    dirichlet_poly,
    hidden_symmetry_holds,
    secular_poly,
    sturmian_r2,
    sturmian_u,
    verify_rearrangement,
)


def test_corner_expansion_equals_brute_force():
    rng = random.Random(314159)
    for n in range(2, 9):
        for _ in range(20):
            u = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            r2 = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            assert secular_poly(n, u=u, r2=r2).poly == brute_force_secular(
                n, u, r2
            )


def test_published_cubic_and_quartic():
    # N=3, r=0:  E^3 - 2u E^2 - (1 - u^2) E + 2u (coefficients in u)
    sec = secular_poly(3, u=None, r2=Fraction(0))
    u = Fraction(1, 3)
    expect = RatPoly(
        (2 * u, u * u - 1, -2 * u, Fraction(1)), "E"
    )
    assert sec.specialize(u=u) == expect
    # N=4, u=0 slice is even with the known r^2 dependence
    sec4 = secular_poly(4, u=Fraction(0), r2=Fraction(1, 2))
    coeffs = sec4.poly.coeffs
    assert all(coeffs[k] == 0 for k in (1, 3))


def test_dirichlet_cells_have_chebyshev_zeros():
    # D_k(E) vanishes exactly at E = 2 cos(j*pi/(k+1))
    for k in range(1, 8):
        p = dirichlet_poly(k).poly
        cs = [float(c) for c in p.coeffs]
        for j in range(1, k + 1):
            e = 2.0 * math.cos(j * math.pi / (k + 1))
            acc = 0.0
            for c in reversed(cs):
                acc = acc * e + c
            assert abs(acc) < 1e-10


def test_golden_r2_curves():
    for n in range(2, 10):
        assert check_known_curve(n)


def test_golden_curve_n5_form():
    curve = sturmian_r2(5)
    x = RatPoly.variable("x")
    one = RatPoly.one("x")
    num = x * x - 3 * x + one
    den = x - 2 * one
    assert curve.curve.num * KNOWN_R2_CURVES[5].den == curve.curve.den * KNOWN_R2_CURVES[5].num
    assert curve.curve.num.monic() == num.monic()
    assert curve.curve.den.monic() == den.monic()


def test_rearrangement_identities():
    for n in (4, 5, 6, 8, 9):
        assert verify_rearrangement(n)


def test_hidden_symmetry_chain():
    for n in range(2, 9):
        assert hidden_symmetry_holds(n)


def test_sturmian_u_matches_published_n3_branch():
    # u(E) = (E^2 - 1 + sqrt(1 - E^2)) / E on the minus branch
    curve = sturmian_u(3, "minus")
    for e in (-0.9, -0.5, 0.25, 0.6, 0.99):
        ref = (e * e - 1 + math.sqrt(1 - e * e)) / e
        assert curve.evaluate_u(e) == pytest.approx(ref, abs=1e-14)


def test_sturmian_u_real_branch_guard():
    curve = sturmian_u(3, "plus")
    with pytest.raises(EvaluationOutsideRealBranch):
        curve.evaluate_u(1.5)


def test_sturmian_u_inverts_secular():
    # any (u(E), E) pair must solve P(u, E) = 0 at r = 0
    for n in (3, 4, 5, 7):
        curve = sturmian_u(n, "plus")
        sec = secular_poly(n, u=None, r2=Fraction(0))
        for e in (0.21, 0.37, -0.12):
            try:
                u = curve.evaluate_u(e)
            except EvaluationOutsideRealBranch:
                continue
            coeffs = sec.float_coeffs(u=u)
            acc = 0.0 + 0.0j
            for c in reversed(coeffs):
                acc = acc * e + c
            assert abs(acc) < 1e-10


def test_parity_symmetry_u_to_minus_u():
    # P(-u, -E) = (-1)^N P(u, E) exactly
    for n in range(2, 9):
        u = Fraction(2, 7)
        p_plus = secular_poly(n, u=u, r2=Fraction(1, 3)).poly
        p_minus = secular_poly(n, u=-u, r2=Fraction(1, 3)).poly
        flipped = RatPoly(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(p_minus.coeffs)),
            "E",
        )
        sign = 1 if n % 2 == 0 else -1
        assert flipped == p_plus * RatPoly((Fraction(sign),), "E")


def test_odd_n_zero_energy_root_at_zero_shift():
    for n in (3, 5, 7, 9):
        for r2 in (Fraction(0), Fraction(1, 2), Fraction(3)):
            p = secular_poly(n, u=Fraction(0), r2=r2).poly
            assert p.coefficient(0) == 0


def test_even_spectrum_symmetry_at_zero_shift():
    # at u=0 the polynomial is even/odd, so the spectrum is E -> -E symmetric
    for n in range(2, 10):
        p = secular_poly(n, u=Fraction(0), r2=Fraction(2, 5)).poly
        for k, c in enumerate(p.coeffs):
            if (k - n) % 2 == 1:
                assert c == 0


def test_brute_force_detects_radical_leak():
    # the quadratic-extension determinant must close over rationals
    p = brute_force_secular(4, Fraction(1, 2), Fraction(1, 3))
    assert p.leading == 1 and p.degree == 4
