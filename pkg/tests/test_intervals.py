"""Interval arithmetic: soundness, refinement, and the embedded constant."""

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from robincheck.intervals import (
    Comparison,
    DomainError,
    Dyadic,
    GAMMA_MAX_BITS,
    PrecisionUnsupported,
    RealInterval,
    compare,
    dyadic_from_fraction,
    euler_gamma,
    exp_gamma,
    interval_from_fractions,
    iv_mul,
    ln_interval,
    ln_of_interval,
)

import oracles

mpmath.mp.dps = 80


def _contains_mp(iv, value):
    return oracles.interval_contains_mp(iv, value)


class TestDyadic:
    def test_normalization(self):
        assert Dyadic(8, 0) == Dyadic(1, 3)
        assert Dyadic(0, 5) == Dyadic(0, 0)

    def test_decimal_str_exact(self):
        assert Dyadic(3, -2).decimal_str() == "0.75"
        assert Dyadic(-5, -3).decimal_str() == "-0.625"
        assert Dyadic(7, 2).decimal_str() == "28"

    @given(st.integers(-2**80, 2**80), st.integers(-70, 20))
    def test_decimal_str_roundtrip(self, m, e):
        d = Dyadic(m, e)
        assert Fraction(d.decimal_str()) == d.as_fraction()

    @given(st.fractions(max_denominator=10**12), st.integers(8, 120))
    def test_directed_rounding(self, fr, bits):
        lo = dyadic_from_fraction(fr, bits, False)
        hi = dyadic_from_fraction(fr, bits, True)
        assert lo.as_fraction() <= fr <= hi.as_fraction()
        if fr != 0:
            assert hi.as_fraction() - lo.as_fraction() <= abs(fr) * Fraction(1, 2**bits)


class TestEulerGamma:
    def test_contains_published_value(self):
        iv = euler_gamma(53)
        assert oracles.agrees_with_decimal(iv, "0.5772156649")
        assert _contains_mp(iv, mpmath.mp.euler)
        assert iv.width().as_fraction() <= Fraction(1, 2**53)

    def test_coarse_precision_still_encloses(self):
        iv = euler_gamma(8)
        assert _contains_mp(iv, mpmath.mp.euler)
        assert iv.width().as_fraction() <= Fraction(1, 2**8)

    def test_midpoint_matches_published_digits(self):
        # first 60 published decimals, embedded independently of the
        # implementation's 1400-digit string
        iv = euler_gamma(256)
        mid = iv.midpoint()
        published = Fraction(oracles.GAMMA_60_DIGITS)
        assert abs(mid - published) < Fraction(1, 10**59)

    def test_precision_unsupported(self):
        with pytest.raises(PrecisionUnsupported):
            euler_gamma(GAMMA_MAX_BITS + 1)

    def test_refinement_nesting(self):
        assert euler_gamma(53).contains_interval(euler_gamma(106))


class TestExpGamma:
    def test_contains_value(self):
        iv = exp_gamma(53)
        # oracle: exponentiate the published gamma digits at high precision
        target = mpmath.exp(mpmath.mpf(oracles.GAMMA_60_DIGITS))
        assert _contains_mp(iv, target)
        assert oracles.agrees_with_decimal(iv, "1.78107")

    @pytest.mark.parametrize("bits", [8, 24, 53, 200, 1024])
    def test_bounds_between_1_and_2(self, bits):
        iv = exp_gamma(bits)
        assert iv.lo.as_fraction() > 1
        assert iv.hi.as_fraction() < 2
        assert iv.width().as_fraction() <= Fraction(4, 2**bits)

    def test_refinement_nesting(self):
        assert exp_gamma(53).contains_interval(exp_gamma(128))

    def test_precision_unsupported(self):
        with pytest.raises(PrecisionUnsupported):
            exp_gamma(GAMMA_MAX_BITS + 100)


class TestLn:
    def test_ln_one_is_zero(self):
        iv = ln_interval(Fraction(1), 53)
        assert iv.contains_fraction(Fraction(0))
        assert iv.width().as_fraction() <= Fraction(1, 2**53)

    def test_ln_two(self):
        iv = ln_interval(Fraction(2), 53)
        assert oracles.agrees_with_decimal(iv, "0.6931471805")
        assert _contains_mp(iv, mpmath.log(2))

    def test_ln_5040(self):
        iv = ln_interval(Fraction(5040), 53)
        assert oracles.agrees_with_decimal(iv, "8.5252")
        assert _contains_mp(iv, mpmath.log(5040))

    def test_ln_cross_checked_at_two_precisions(self):
        coarse = ln_interval(Fraction(5040), 53)
        fine = ln_interval(Fraction(5040), 212)
        assert coarse.contains_interval(fine)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            ln_interval(Fraction(0), 53)
        with pytest.raises(DomainError):
            ln_interval(Fraction(-3, 7), 53)

    def test_soundness_random_rationals(self):
        # spec-scale randomized soundness run: oracle value always inside
        rng = random.Random(20260808)
        for _ in range(1000):
            num = rng.randint(1, 10**18)
            den = rng.randint(1, 10**18)
            bits = rng.choice([24, 53, 128])
            iv = ln_interval(Fraction(num, den), bits)
            true = mpmath.log(mpmath.mpf(num)) - mpmath.log(mpmath.mpf(den))
            assert _contains_mp(iv, true), (num, den, bits)

    def test_refinement_random(self):
        rng = random.Random(99)
        for _ in range(200):
            fr = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**9))
            bits = rng.choice([16, 53, 100])
            assert ln_interval(fr, bits).contains_interval(
                ln_interval(fr, 2 * bits))

    def test_width_invariant(self):
        rng = random.Random(5)
        for _ in range(200):
            fr = Fraction(rng.randint(1, 10**30), rng.randint(1, 10**6))
            bits = rng.choice([24, 53, 128])
            iv = ln_interval(fr, bits)
            bound = Fraction(1, 2**bits) * max(
                Fraction(1), abs(iv.hi.as_fraction()))
            assert iv.width().as_fraction() <= bound


class TestLnOfInterval:
    def test_ln_of_e_contains_one(self):
        e_hi = mpmath.mpf(mpmath.nstr(mpmath.e, 40))
        enclosure = interval_from_fractions(
            Fraction("2.71828182845904523"), Fraction("2.71828182845904524"), 53)
        iv = ln_of_interval(enclosure, 53)
        assert iv.contains_fraction(Fraction(1))

    def test_log_log_5040(self):
        inner = ln_interval(Fraction(5040), 53)
        outer = ln_of_interval(inner, 53)
        assert oracles.agrees_with_decimal(outer, "2.1430")
        assert _contains_mp(outer, mpmath.log(mpmath.log(5040)))

    def test_domain_error_on_nonpositive_lo(self):
        bad = RealInterval(Dyadic(-1, -4), Dyadic(1, 0), 53)
        with pytest.raises(DomainError):
            ln_of_interval(bad, 53)

    def test_monotone_endpoints(self):
        x = interval_from_fractions(Fraction(2), Fraction(3), 53)
        iv = ln_of_interval(x, 53)
        assert _contains_mp(iv, mpmath.log(2))
        assert _contains_mp(iv, mpmath.log(3))


class TestCompare:
    def test_trivial_cases(self):
        rhs = interval_from_fractions(Fraction(1), Fraction(2), 53)
        assert compare(Fraction(1, 2), rhs) is Comparison.LESS
        assert compare(Fraction(3), rhs) is Comparison.GREATER
        assert compare(Fraction(3, 2), rhs) is Comparison.OVERLAPPING

    def test_endpoints_overlap(self):
        rhs = interval_from_fractions(Fraction(1), Fraction(2), 53)
        assert compare(Fraction(1), rhs) is Comparison.OVERLAPPING
        assert compare(Fraction(2), rhs) is Comparison.OVERLAPPING

    def test_never_flips_under_refinement(self):
        rng = random.Random(13)
        for _ in range(300):
            fr = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
            x = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
            coarse = ln_interval(x, 16)
            fine = ln_interval(x, 64)
            a = compare(fr, coarse)
            b = compare(fr, fine)
            if a is Comparison.LESS:
                assert b is not Comparison.GREATER
            if a is Comparison.GREATER:
                assert b is not Comparison.LESS


class TestExactRatioAlgebra:
    # ExactRatio is fractions.Fraction; pin the contract anyway.

    @given(st.fractions(), st.fractions(), st.fractions())
    @settings(max_examples=200)
    def test_add_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(st.fractions(), st.fractions(), st.fractions())
    @settings(max_examples=200)
    def test_mul_associative_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(st.fractions())
    def test_lowest_terms_positive_denominator(self, a):
        from math import gcd
        assert a.denominator > 0
        assert gcd(a.numerator, a.denominator) == 1


def test_iv_mul_sound():
    rng = random.Random(3)
    for _ in range(200):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        ia = interval_from_fractions(a, a + Fraction(1, 997), 53)
        ib = interval_from_fractions(b, b + Fraction(1, 991), 53)
        prod = iv_mul(ia, ib, 53)
        assert prod.lo.as_fraction() <= a * b <= prod.hi.as_fraction()
