"""Core arithmetic: Laurent polynomials, canonical rational functions,
q-brackets, and the reflection identity."""

import random
from fractions import Fraction

import pytest

from qgen.qcore import (
    ONE,
    PoleError,
    Q,
    RatFuncQ,
    ZERO,
    LaurentPolyQ,
    binomial,
    eval_at,
    q_power,
    qbracket,
    qbracket_reflect,
    ratfunc_arith,
    subst_q_inverse,
)


def bracket_oracle(x: int, a: int, q0: Fraction) -> Fraction:
    """Independent numeric oracle: (1 - q0^(a x)) / (1 - q0^a)."""
    return (1 - q0 ** (a * x)) / (1 - q0**a)


def random_laurent(rng: random.Random, allow_zero: bool = True) -> LaurentPolyQ:
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, 4)):
        terms[rng.randint(-4, 4)] = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    return LaurentPolyQ(terms)


def random_ratfunc(rng: random.Random) -> RatFuncQ:
    num = random_laurent(rng)
    den = random_laurent(rng, allow_zero=False)
    while den.is_zero:
        den = random_laurent(rng, allow_zero=False)
    return RatFuncQ(num, den)


class TestQBracket:
    def test_empty_sum(self):
        assert qbracket(0, 1) == ZERO

    def test_two(self):
        assert qbracket(2, 1) == RatFuncQ({0: 1, 1: 1})

    def test_scaled(self):
        assert qbracket(3, 2) == RatFuncQ({0: 1, 2: 1, 4: 1})

    def test_negative_argument(self):
        # (1 - q^-1)/(1 - q) canonicalizes to -q^-1
        assert qbracket(-1, 1) == RatFuncQ({-1: -1})

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            qbracket(3, 0)

    @pytest.mark.parametrize("x", range(-6, 7))
    @pytest.mark.parametrize("a", [-3, -2, -1, 1, 2, 3])
    def test_definition_identity(self, x, a):
        # [x]_a (1 - q^a) + q^(a x) == 1
        assert qbracket(x, a) * (ONE - q_power(a)) + q_power(a * x) == ONE

    @pytest.mark.parametrize("x", range(-4, 5))
    @pytest.mark.parametrize("a", [-2, 1, 3])
    def test_against_numeric_oracle(self, x, a):
        for q0 in (Fraction(2), Fraction(5), Fraction(3, 2)):
            assert eval_at(qbracket(x, a), q0) == bracket_oracle(x, a, q0)

    def test_two_bracket_is_one_plus_q(self):
        assert qbracket(2, 1) == ONE + Q
        assert eval_at(qbracket(2, 1), 1) == 2

    def test_args_pair(self):
        from qgen.qcore import QBracketArgs

        assert QBracketArgs(3, 2).value() == qbracket(3, 2)
        with pytest.raises(ValueError):
            QBracketArgs(3, 0)


class TestArithmetic:
    def test_cancellation(self):
        f = RatFuncQ(LaurentPolyQ({0: 1, 2: -1}), LaurentPolyQ({0: 1, 1: -1}))
        assert f == RatFuncQ({0: 1, 1: 1})

    def test_expansion(self):
        assert RatFuncQ({0: 1, 1: 1}) * RatFuncQ({0: 1, 2: 1}) == RatFuncQ(
            {0: 1, 1: 1, 2: 1, 3: 1}
        )

    def test_inverse_power(self):
        f = RatFuncQ({0: 1, 1: 1}) / RatFuncQ({0: 1, 2: 1})
        assert f**-1 == RatFuncQ(LaurentPolyQ({0: 1, 2: 1}), LaurentPolyQ({0: 1, 1: 1}))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO
        with pytest.raises(ZeroDivisionError):
            ZERO**-1

    def test_dispatch_surface(self):
        a, b = qbracket(3, 1), qbracket(2, 1)
        assert ratfunc_arith(a, b, "add") == a + b
        assert ratfunc_arith(a, b, "sub") == a - b
        assert ratfunc_arith(a, b, "mul") == a * b
        assert ratfunc_arith(a, b, "div") == a / b
        assert ratfunc_arith(a, 3, "pow") == a**3
        with pytest.raises(ValueError):
            ratfunc_arith(a, b, "compose")

    def test_field_axioms_randomized(self):
        rng = random.Random(20240811)
        for _ in range(60):
            f, g, h = (random_ratfunc(rng) for _ in range(3))
            assert f + g == g + f
            assert (f + g) + h == f + (g + h)
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + ZERO == f
            assert f * ONE == f
            if not g.is_zero:
                assert (f / g) * g == f

    def test_canonical_uniqueness_vs_eval(self):
        # equal canonical forms iff values agree at enough sample points
        rng = random.Random(7)
        points = [Fraction(k, d) for k in range(2, 40) for d in (1, 3, 7)]
        for _ in range(120):
            f, g = random_ratfunc(rng), random_ratfunc(rng)
            diff = f - g
            if f == g:
                assert diff.is_zero
                continue
            # a nonzero rational function has finitely many roots
            span = diff.num.max_exp() - diff.num.min_exp()
            disagreements = 0
            tried = 0
            for q0 in points:
                if tried > span + 3:
                    break
                try:
                    lv, rv = f.eval_at(q0), g.eval_at(q0)
                except PoleError:
                    continue
                tried += 1
                if lv != rv:
                    disagreements += 1
            assert disagreements > 0

    def test_scalar_coercion(self):
        f = qbracket(2, 1)
        assert 1 + f == f + 1 == RatFuncQ({0: 2, 1: 1})
        assert 2 * f == f * 2
        assert f - 1 == Q
        assert 1 - f == -Q
        assert Fraction(1, 2) * f == f / 2
        assert 6 / qbracket(2, 1) == RatFuncQ(6) / qbracket(2, 1)


class TestSubstQInverse:
    def test_monomial(self):
        assert subst_q_inverse(q_power(3)) == q_power(-3)

    def test_ratio(self):
        f = RatFuncQ({0: 1, 1: 1}) / RatFuncQ({0: 1, 2: 1})
        g = subst_q_inverse(f)
        assert g == RatFuncQ(LaurentPolyQ({1: 1, 2: 1}), LaurentPolyQ({0: 1, 2: 1}))
        # numeric cross-check at q = 5
        assert g.eval_at(5) == f.eval_at(Fraction(1, 5))

    def test_zero_fixed_point(self):
        assert subst_q_inverse(ZERO) == ZERO

    def test_involution_randomized(self):
        rng = random.Random(99)
        for _ in range(100):
            f = random_ratfunc(rng)
            assert subst_q_inverse(subst_q_inverse(f)) == f


class TestEvalAt:
    def test_polynomial(self):
        assert eval_at(RatFuncQ({0: 1, 1: 1}), 1) == 2

    def test_negative_exponent(self):
        assert eval_at(q_power(-1), Fraction(1, 2)) == 2

    def test_pole(self):
        f = ONE / (ONE - Q)
        with pytest.raises(PoleError):
            eval_at(f, 1)

    def test_zero_with_negative_exponent(self):
        with pytest.raises(PoleError):
            eval_at(q_power(-2), 0)

    def test_removable_singularity_already_cancelled(self):
        # (1-q^2)/(1-q) is stored as 1+q, so q=1 evaluates fine
        f = RatFuncQ(LaurentPolyQ({0: 1, 2: -1}), LaurentPolyQ({0: 1, 1: -1}))
        assert eval_at(f, 1) == 2


class TestReflection:
    @pytest.mark.parametrize("x", range(-3, 5))
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("n", range(6))
    def test_grid(self, x, alpha, n):
        lhs, rhs = qbracket_reflect(x, alpha, n)
        assert lhs == rhs

    def test_values(self):
        assert qbracket_reflect(1, 2, 1) == (ZERO, ZERO)
        assert qbracket_reflect(0, 1, 1) == (ONE, ONE)
        assert qbracket_reflect(2, 1, 2) == (q_power(2), q_power(2))

    def test_bad_weight(self):
        with pytest.raises(ValueError):
            qbracket_reflect(1, 0, 2)


class TestBinomial:
    def test_values(self):
        assert binomial(4, 2) == 6
        assert binomial(5, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestCanonicalForm:
    def test_denominator_normalization(self):
        # content and sign move to the numerator; minimal exponent >= 0
        f = RatFuncQ(LaurentPolyQ({0: 2}), LaurentPolyQ({-1: -4, 1: -6}))
        assert f.den.min_exp() == 0
        assert f.den.items()[-1][1] > 0
        ints = [c for _, c in f.den.items()]
        assert all(c.denominator == 1 for c in ints)

    def test_zero_is_zero_over_one(self):
        f = RatFuncQ(0, LaurentPolyQ({2: 5}))
        assert f.num == LaurentPolyQ.zero()
        assert f.den == LaurentPolyQ.one()

    def test_hashable(self):
        assert len({qbracket(2, 1), ONE + Q, qbracket(3, 1)}) == 2


class TestSerialization:
    def test_round_trip(self):
        rng = random.Random(5)
        for _ in range(50):
            f = random_ratfunc(rng)
            text = f.to_canonical_string()
            assert RatFuncQ.from_canonical_string(text) == f
            # serialize -> parse -> serialize is a fixed point
            assert RatFuncQ.from_canonical_string(text).to_canonical_string() == text

    def test_explicit_exponents(self):
        assert qbracket(2, 1).to_canonical_string() == "1*q^0 + 1*q^1 / 1*q^0"
        assert ZERO.to_canonical_string() == "0 / 1*q^0"

    def test_malformed(self):
        with pytest.raises(ValueError):
            RatFuncQ.from_canonical_string("q + 1")
        with pytest.raises(ValueError):
            RatFuncQ.from_canonical_string("1*q^0 + q / 1*q^0")

    def test_pretty_str(self):
        assert str(qbracket(2, 1)) == "1 + q"
        assert str(ZERO) == "0"
        assert str(qbracket(2, 1) / qbracket(2, 2)) == "(1 + q)/(1 + q^2)"
