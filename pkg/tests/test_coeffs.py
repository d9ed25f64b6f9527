import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidring.coeffs import LaurentPoly, RationalFunction, div, is_zero, t_power

HALF = Fraction(1, 2)


def rf(k, coeff=1):
    return RationalFunction.s_power(k, coeff)


class TestTPower:
    def test_zero_exponent_is_one(self):
        assert t_power(0).is_one

    def test_half_powers_multiply(self):
        assert t_power(HALF) * t_power(HALF) == t_power(1)

    def test_bracket_denominator(self):
        d = t_power(1) - t_power(-1)
        assert str(d) == "t - t^(-1)"
        assert not d.is_zero

    def test_rejects_non_half_integers(self):
        with pytest.raises(ValueError):
            t_power(Fraction(1, 3))


class TestDivision:
    def test_self_division(self):
        d = t_power(1) - t_power(-1)
        assert div(d, d).is_one

    def test_long_division(self):
        # numerator s^(-1)(s^4 - 1), denominator s^(-2)(s^4 - 1): quotient s
        num = t_power(Fraction(3, 2)) - t_power(Fraction(-1, 2))
        den = t_power(1) - t_power(-1)
        q = div(num, den)
        assert q == t_power(HALF)
        # independent check: multiply back
        assert q * den == num

    def test_multiply_by_one(self):
        x = RationalFunction.one() - t_power(1) * t_power(1)
        assert x * RationalFunction.one() == x
        assert str(x) == "-t^2 + 1"

    def test_divide_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            div(t_power(1), RationalFunction.zero())
        with pytest.raises(ZeroDivisionError):
            RationalFunction.zero().invert()


class TestIsZero:
    def test_zero(self):
        assert is_zero(RationalFunction.zero())

    def test_nonzero(self):
        assert not is_zero(t_power(HALF))

    def test_cancellation(self):
        x = t_power(1)
        assert is_zero(x + (-x))


def random_laurent(rng, max_terms=3):
    p = LaurentPoly()
    for _ in range(rng.randint(0, max_terms)):
        e = rng.randint(-8, 8)
        num = rng.randint(-20, 20)
        den = rng.randint(1, 20)
        p = p + LaurentPoly({e: Fraction(num, den)})
    return p


def random_rf(rng):
    num = random_laurent(rng)
    den = random_laurent(rng)
    while den.is_zero:
        den = random_laurent(rng)
    return RationalFunction(num, den)


class TestFieldAxioms:
    def test_randomized_axioms(self):
        rng = random.Random(20240817)
        one = RationalFunction.one()
        for _ in range(1000):
            a, b, c = random_rf(rng), random_rf(rng), random_rf(rng)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero:
                assert a * a.invert() == one

    def test_round_trip_division(self):
        rng = random.Random(99)
        for _ in range(300):
            p = RationalFunction.from_laurent(random_laurent(rng))
            q = random_rf(rng)
            if q.is_zero:
                continue
            assert (p * q) / q == p


@st.composite
def laurent_polys(draw):
    items = draw(st.dictionaries(st.integers(-6, 6),
                                 st.fractions(min_value=-10, max_value=10,
                                              max_denominator=12),
                                 max_size=4))
    return LaurentPoly(items)


@given(laurent_polys(), laurent_polys())
@settings(max_examples=150, deadline=None)
def test_normalization_idempotent(p, q):
    if q.is_zero:
        return
    r = RationalFunction(p, q)
    again = RationalFunction(r.num, r.den)
    assert again.num == r.num and again.den == r.den


@given(laurent_polys(), laurent_polys(), laurent_polys())
@settings(max_examples=150, deadline=None)
def test_equal_iff_identical_representation(p, q, r):
    if q.is_zero or r.is_zero:
        return
    a = RationalFunction(p, q)
    b = RationalFunction(p * r, q * r)
    assert a == b
    assert a.num == b.num and a.den == b.den


class TestDisplay:
    def test_half_power_display(self):
        x = t_power(Fraction(3, 2)) - t_power(-HALF)
        assert str(x) == "t^(3/2) - t^(-1/2)"

    def test_denominator_display(self):
        x = t_power(HALF) / (RationalFunction.one() + t_power(1))
        assert str(x) == "(t^(1/2))/(t + 1)"

    def test_fraction_coefficients(self):
        x = RationalFunction.s_power(2, Fraction(3, 4))
        assert str(x) == "3/4*t"
