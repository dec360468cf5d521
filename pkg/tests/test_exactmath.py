"""
Exact arithmetic: cyclotomic numbers, Laurent polynomials in t = q^(1/2),
rational functions, truncated series and two-variable values
"""
from fractions import Fraction

import pytest

from braidtrace.core.exceptions import DenominatorError, PoleError
from braidtrace.exactmath.bivariate import ARFunc, ATLaurent
from braidtrace.exactmath.cyclo import Cyclo, half_root
from braidtrace.exactmath.laurent import DELTA, HalfLaurent, ONE, T, T_INV, ZERO
from braidtrace.exactmath.rfunc import RFunc, one_minus_q_power


def q_poly(*coeffs):
    return HalfLaurent.from_q_coefficients(coeffs)


def random_laurent(rng, low=-4, high=4):
    return HalfLaurent({e: rng.randint(-3, 3) for e in range(low, high + 1) if rng.random() < 0.5})


class TestCyclo:
    """Test cyclotomic field arithmetic"""

    def test_roots_of_unity(self):
        assert Cyclo.root(4) ** 2 == -1
        assert Cyclo.root(3, 1) + Cyclo.root(3, 2) == -1
        assert Cyclo.root(6, 3) == -1

    def test_golden_ratio_relation(self):
        """x = 2 cos(2 pi / 5) satisfies x^2 + x = 1"""
        x = Cyclo.cos_sum(5, 1)
        assert not x.is_rational()
        assert x * x + x == 1

    def test_inverse(self):
        x = Cyclo.root(5) + 2
        assert x * x.inverse() == 1
        with pytest.raises(ZeroDivisionError):
            Cyclo.rational(0, 5).inverse()

    def test_equality_across_conductors(self):
        assert Cyclo.root(3) == Cyclo.root(6, 2)
        assert Cyclo.root(4).lift(8) == Cyclo.root(8, 2)

    def test_conjugate(self):
        z = Cyclo.root(7, 2)
        assert z * z.conjugate() == 1

    def test_half_root(self):
        assert half_root(Fraction(1, 2)) == (4, 1)
        assert half_root(Fraction(3, 2)) == (4, 3)
        assert half_root(Fraction(1, 3)) == (6, 1)
        assert half_root(Fraction(0)) == (1, 0)

    def test_rational_collapses(self):
        assert Cyclo.cos_sum(4, 1).is_rational()
        assert Cyclo.cos_sum(6, 1).to_fraction() == 1
        with pytest.raises(ValueError):
            Cyclo.root(5).to_fraction()


class TestHalfLaurent:
    """Test Laurent polynomials in t"""

    def test_zero_coefficients_dropped(self):
        p = HalfLaurent({0: 1, 2: 0, -1: Fraction(0)})
        assert p.terms == {0: Fraction(1)}
        assert HalfLaurent({1: 1}) - T == ZERO

    def test_bar_involution(self):
        assert T.bar() == -T_INV
        assert DELTA.bar() == DELTA
        assert q_poly(1, 2).bar() == HalfLaurent({0: 1, -2: 2})

    def test_eps_bar(self):
        p = HalfLaurent({5: 3, 1: -1})
        assert p.eps_bar() == HalfLaurent({-5: 3, -1: -1})
        assert p.eps_bar().eps_bar() == p
        assert (T - T_INV).eps_bar() == T_INV - T

    def test_render(self):
        assert HalfLaurent({3: 1}).render() == "q^(3/2)"
        assert q_poly(1, 0, -1).render() == "−q^2 + 1"
        assert q_poly(1, 0, -1).render(ascii_only=True) == "-q^2 + 1"
        assert HalfLaurent({-2: 2}).render(ascii_only=True) == "2*q^(-1)"
        assert ZERO.render() == "0"

    def test_parse(self):
        parsed = HalfLaurent.parse("q^(3/2) - 2*q^(-1) + 1/2")
        assert parsed == HalfLaurent({3: 1, -2: -2, 0: Fraction(1, 2)})
        assert HalfLaurent.parse("0") == ZERO
        with pytest.raises(ValueError):
            HalfLaurent.parse("q^(1/3)")

    def test_evaluate_q(self):
        assert q_poly(1, 2, 3).evaluate_q(2) == 17
        with pytest.raises(ValueError):
            T.evaluate_q(4)

    def test_monomial_inverse(self):
        assert HalfLaurent.monomial(2, 3) ** -1 == HalfLaurent.monomial(-2, Fraction(1, 3))
        with pytest.raises(ValueError):
            DELTA ** -1

    def test_eval_at_root(self):
        """1 + q vanishes at t = i"""
        assert q_poly(1, 1).eval_at_root(Fraction(1, 2)).is_zero()
        assert (ONE + HalfLaurent.monomial(2) + HalfLaurent.monomial(4)).eval_at_root(Fraction(1, 3)).is_zero()

    def test_ring_axioms(self, rng):
        for _ in range(200):
            a, b, c = (random_laurent(rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert (a * b).bar() == a.bar() * b.bar()
            assert a.bar().bar() == a
            assert (a * b).shift(3) == a.shift(1) * b.shift(2)


class TestRFunc:
    """Test normalized rational functions"""

    def test_normal_form_cancels(self):
        value = RFunc(q_poly(1, 0, -1), q_poly(1, -1))
        assert value.is_laurent()
        assert value == RFunc(q_poly(1, 1))

    def test_sign_convention_is_canonical(self):
        assert RFunc(ONE, q_poly(1, -1)) == RFunc(-ONE, q_poly(-1, 1))
        assert RFunc(T, HalfLaurent.monomial(2)) == RFunc(T_INV)

    def test_series(self):
        series = (1 / one_minus_q_power(1)).to_series(3)
        assert series.q_coefficients() == [1, 1, 1, 1]
        assert series.render() == "1 + q + q^2 + q^3 + O(q^(7/2))"

    def test_evaluate(self):
        value = RFunc(ONE, q_poly(1, -1))
        assert value.evaluate_q(2) == -1
        with pytest.raises(PoleError):
            value.evaluate_q(1)

    def test_pole_at_root(self):
        with pytest.raises(PoleError):
            RFunc(ONE, q_poly(1, 1)).eval_at_root(Fraction(1, 2))

    def test_to_laurent_requires_cancellation(self):
        with pytest.raises(DenominatorError):
            RFunc(ONE, q_poly(1, -1)).to_laurent()

    def test_render_and_parse(self):
        value = RFunc(q_poly(1, 0, 1), q_poly(1, -1))
        assert value.render(ascii_only=True) == "(-q^2 - 1) / (q - 1)"
        assert RFunc.parse(value.render()) == value

    def test_field_axioms(self, rng):
        checked = 0
        while checked < 50:
            a = RFunc(random_laurent(rng, 0, 4), random_laurent(rng, 0, 4) or ONE)
            b = RFunc(random_laurent(rng, 0, 4), random_laurent(rng, 0, 4) or ONE)
            if b.is_zero():
                continue
            assert (a / b) * b == a
            assert a + b - b == a
            assert (a * b).bar() == a.bar() * b.bar()
            checked += 1


class TestBivariate:
    """Test values in a and t"""

    def test_trefoil_json_keys(self):
        value = ATLaurent({(2, -2): 1, (2, 2): 1, (4, 0): -1})
        assert value.to_json() == {"a2 q-1": 1, "a2 q1": 1, "a4 q0": -1}
        assert ATLaurent.from_json(value.to_json()) == value

    def test_half_integer_exponent_key(self):
        assert ATLaurent({(0, 3): 2}).to_json() == {"a0 q3/2": 2}

    def test_denominator_reduction(self):
        assert ARFunc({0: 1, 2: -1}, power=1) == ARFunc.constant(1)
        kept = ARFunc({0: DELTA}, power=1)
        assert kept.power == 1
        assert not kept.is_laurent()
        with pytest.raises(DenominatorError):
            kept.to_atlaurent()

    def test_arithmetic(self):
        x = ARFunc({0: 1}, power=1)
        # 1/(1 - a^2) - a^2/(1 - a^2) = 1
        assert x - ARFunc({2: 1}, power=1) == ARFunc.constant(1)
        assert (x * ARFunc({0: 1, 2: -1})).is_laurent()
