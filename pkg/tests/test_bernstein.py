"""Weighted q-Bernstein basis: values, symmetry, completeness, operator."""

from fractions import Fraction

import pytest

from qgen.bernstein import (
    BernsteinIndex,
    bernstein_operator,
    bernstein_poly,
    bernstein_symmetry_check,
)
from qgen.qcore import ONE, RatFuncQ, ZERO, LaurentPolyQ, qbracket


class TestBasisValues:
    def test_empty_product(self):
        assert bernstein_poly(BernsteinIndex(0, 0, 1), 7) == ONE

    def test_right_factor_at_zero(self):
        assert bernstein_poly(BernsteinIndex(0, 2, 2), 0) == ONE

    def test_laurent_value(self):
        # 2 [2]_q [-1]_{1/q} = -2q(1+q)
        got = bernstein_poly(BernsteinIndex(1, 2, 1), 2)
        assert got == RatFuncQ(LaurentPolyQ({1: -2, 2: -2}))

    def test_index_validation(self):
        with pytest.raises(IndexError):
            BernsteinIndex(3, 2, 1)
        with pytest.raises(IndexError):
            BernsteinIndex(-1, 2, 1)
        with pytest.raises(ValueError):
            BernsteinIndex(0, 2, 0)


class TestSymmetry:
    def test_trivial_case(self):
        record = bernstein_symmetry_check(BernsteinIndex(0, 1, 1), 0)
        assert record.status == "PASS"

    def test_sample_case(self):
        record = bernstein_symmetry_check(BernsteinIndex(1, 3, 2), 2)
        assert record.status == "PASS"

    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("x", range(-1, 4))
    def test_full_grid(self, n, alpha, x):
        for k in range(n + 1):
            record = bernstein_symmetry_check(BernsteinIndex(k, n, alpha), x)
            assert record.status == "PASS", (k, n, alpha, x)


class TestCompleteness:
    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("x", range(-3, 4))
    def test_binomial_completeness(self, n, alpha, x):
        total = ZERO
        for k in range(n + 1):
            total = total + bernstein_poly(BernsteinIndex(k, n, alpha), x)
        assert total == (qbracket(x, alpha) + qbracket(1 - x, -alpha)) ** n


class TestOperator:
    def test_constant_one(self):
        got = bernstein_operator([1, 1, 1], n=2, alpha=1, x=3)
        assert got == (qbracket(3, 1) + qbracket(-2, -1)) ** 2

    def test_zero_function(self):
        assert bernstein_operator([0, 0, 0], n=2, alpha=1, x=1) == ZERO

    def test_constant_scales(self):
        c = Fraction(3, 7)
        got = bernstein_operator([c, c, c, c], n=3, alpha=2, x=2)
        assert got == c * (qbracket(2, 2) + qbracket(-1, -2)) ** 3

    def test_linearity_in_samples(self):
        f = [Fraction(1), Fraction(2), Fraction(-1)]
        g = [Fraction(0), Fraction(1, 2), Fraction(5)]
        combo = [2 * a + 3 * b for a, b in zip(f, g)]
        lhs = bernstein_operator(combo, n=2, alpha=2, x=1)
        rhs = 2 * bernstein_operator(f, n=2, alpha=2, x=1) + 3 * bernstein_operator(
            g, n=2, alpha=2, x=1
        )
        assert lhs == rhs

    def test_arity_error(self):
        with pytest.raises(ValueError):
            bernstein_operator([1, 2], n=2, alpha=1, x=0)
        with pytest.raises(ValueError):
            bernstein_operator([1], n=0, alpha=1, x=0)
