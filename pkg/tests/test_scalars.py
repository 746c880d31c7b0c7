"""Exact scalar substrate: binomial coefficients, rationals, parsing."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersum import (
    ComplexScalar,
    DomainError,
    Mode,
    ModeMismatchError,
    binomial_coefficient,
    format_real,
    format_scalar,
    generalized_binomial,
    parse_rational,
    parse_scalar,
)


def falling_factorial_oracle(a: int, j: int) -> Fraction:
    """Independent route: the product a(a-1)...(a-j+1) over j!."""
    num = 1
    for i in range(j):
        num *= a - i
    return Fraction(num, math.factorial(j))


class TestBinomialCoefficient:
    def test_small_cases(self):
        assert binomial_coefficient(5, 2) == 10
        assert binomial_coefficient(4, 0) == 1
        assert binomial_coefficient(3, 5) == 0

    def test_negative_arguments_rejected(self):
        with pytest.raises(DomainError):
            binomial_coefficient(-1, 2)
        with pytest.raises(DomainError):
            binomial_coefficient(3, -1)

    @given(st.integers(0, 60), st.integers(0, 61))
    def test_pascal_identity(self, n, k):
        if k >= 1:
            lhs = binomial_coefficient(n, k - 1) + binomial_coefficient(n, k)
            assert lhs == binomial_coefficient(n + 1, k)


class TestGeneralizedBinomial:
    def test_examples(self):
        assert generalized_binomial(-1, 3) == -1  # (-1)(-2)(-3)/6
        assert generalized_binomial(-3, 2) == 6  # (-3)(-4)/2
        assert generalized_binomial(7, 0) == 1

    def test_matches_product_oracle(self):
        for a in range(-15, 16):
            for j in range(0, 11):
                expected = falling_factorial_oracle(a, j)
                assert expected.denominator == 1
                assert generalized_binomial(a, j) == expected

    def test_agrees_with_plain_binomial_for_nonneg(self):
        for n in range(0, 20):
            for k in range(0, n + 3):
                assert generalized_binomial(n, k) == binomial_coefficient(n, k)

    def test_negation_identity(self):
        # C(n, k) = (-1)^k C(k - n - 1, k)
        for n in range(0, 21):
            for k in range(0, n + 1):
                assert generalized_binomial(-n - 1 + k, k) == (
                    (-1) ** k
                ) * binomial_coefficient(n, k)

    def test_negative_j_rejected(self):
        with pytest.raises(DomainError):
            generalized_binomial(3, -1)


def test_rational_round_trip_is_exact():
    rng = random.Random(20240815)
    for _ in range(1000):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert (a + b) - b == a


class TestComplexScalarArithmetic:
    def test_exact_closure(self):
        rng = random.Random(7)
        for _ in range(200):
            x = ComplexScalar(
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            )
            y = ComplexScalar(
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            )
            assert (x + y) - y == x
            if not y.is_zero():
                assert (x * y) / y == x

    def test_mode_mismatch_raises(self):
        exact = ComplexScalar.exact(1, 2)
        floaty = ComplexScalar.of_float(1.0, 2.0)
        for op in (
            lambda a, b: a + b,
            lambda a, b: a - b,
            lambda a, b: a * b,
            lambda a, b: a / b,
        ):
            with pytest.raises(ModeMismatchError):
                op(exact, floaty)
        with pytest.raises(ModeMismatchError):
            exact + 0.5
        with pytest.raises(ModeMismatchError):
            floaty * Fraction(1, 2)

    def test_int_operands_work_in_both_modes(self):
        assert ComplexScalar.exact(1, 1) * 2 == ComplexScalar.exact(2, 2)
        assert ComplexScalar.of_float(1.5) + 1 == ComplexScalar.of_float(2.5)

    def test_mode_tag(self):
        assert ComplexScalar.exact(1).mode is Mode.EXACT
        assert ComplexScalar.of_float(1.0).mode is Mode.FLOAT

    def test_abs2_and_conjugate(self):
        z = ComplexScalar.exact(Fraction(3, 5), Fraction(4, 5))
        assert z.abs2() == Fraction(1)
        assert abs(z) == pytest.approx(1.0)
        assert z * z.conjugate() == ComplexScalar.exact(z.abs2())

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ComplexScalar.exact(1) / ComplexScalar.exact(0)

    def test_mixed_part_types_rejected(self):
        with pytest.raises(ModeMismatchError):
            ComplexScalar(Fraction(1), 2.0)


class TestParsing:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-2", Fraction(-2)),
            ("0.5", Fraction(1, 2)),
            ("1e-3", Fraction(1, 1000)),
        ],
    )
    def test_parse_rational(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize(
        "text,re_val,im_val",
        [
            ("3/4+1/2i", Fraction(3, 4), Fraction(1, 2)),
            ("-2", Fraction(-2), Fraction(0)),
            ("2i", Fraction(0), Fraction(2)),
            ("-i", Fraction(0), Fraction(-1)),
            ("1-0.5i", Fraction(1), Fraction(-1, 2)),
            ("1e-3+2i", Fraction(1, 1000), Fraction(2)),
        ],
    )
    def test_parse_scalar_exact(self, text, re_val, im_val):
        z = parse_scalar(text)
        assert z.mode is Mode.EXACT
        assert z.re == re_val and z.im == im_val

    def test_euler_literal_is_float(self):
        z = parse_scalar("e")
        assert z.mode is Mode.FLOAT
        assert z.re == math.e

    def test_bad_literals(self):
        from eulersum import ParseError

        for text in ("", "1/", "x+2i", "1..2"):
            with pytest.raises(ParseError):
                parse_scalar(text)

    @given(st.fractions(max_denominator=10**6), st.fractions(max_denominator=10**6))
    def test_format_parse_round_trip_exact(self, re_val, im_val):
        z = ComplexScalar(re_val, im_val)
        assert parse_scalar(format_scalar(z)) == z

    def test_float_format_round_trips(self):
        rng = random.Random(11)
        for _ in range(200):
            x = rng.uniform(-1e6, 1e6) * 10 ** rng.randint(-12, 12)
            assert float(format_real(x)) == x

    def test_format_examples(self):
        assert format_real(Fraction(7, 8)) == "7/8"
        assert format_real(Fraction(3)) == "3"
        assert format_scalar(ComplexScalar.exact(0, Fraction(-1, 3))) == "-1/3i"
        assert format_scalar(ComplexScalar.exact(1, 2)) == "1+2i"
