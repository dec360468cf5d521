"""
Normalized rational functions in t = q^(1/2) with rational coefficients.

Canonical form: num / den where den is a primitive integer polynomial with
positive leading coefficient and nonzero constant term, num is a Laurent
polynomial, and gcd(num, den) = 1. Equality is equality of normal forms.
"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

from braidtrace.core.exceptions import DenominatorError, PoleError, SeriesError
from braidtrace.exactmath.cyclo import Cyclo, lcm, to_fraction
from braidtrace.exactmath.laurent import HalfLaurent, ONE, ZERO
from braidtrace.exactmath.series import TruncSeries

_R, _t = ring("t", QQ)


def _to_poly(p: HalfLaurent):
    """HalfLaurent with nonnegative exponents -> sympy PolyElement"""
    if not p.has_rational_coefficients():
        raise TypeError("Rational functions need rational coefficients")
    return _R.from_dict({(e,): QQ(c.numerator, c.denominator) for e, c in p.items()})


def _from_poly(poly) -> HalfLaurent:
    return HalfLaurent({monom[0]: to_fraction(c) for monom, c in poly.terms()})


def _content(p: HalfLaurent) -> Fraction:
    """Positive rational c such that p / c is a primitive integer polynomial"""
    coeffs = [c for _, c in p.items()]
    den_lcm = reduce(lcm, (c.denominator for c in coeffs), 1)
    num_gcd = reduce(gcd, (abs(c.numerator) * (den_lcm // c.denominator) for c in coeffs), 0)
    return Fraction(num_gcd, den_lcm)


def _normalize(num: HalfLaurent, den: HalfLaurent) -> Tuple[HalfLaurent, HalfLaurent]:
    if den.is_zero():
        raise ZeroDivisionError("Rational function with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    vn, vd = num.valuation(), den.valuation()
    offset = vn - vd
    p, d = num.shift(-vn), den.shift(-vd)
    if d.is_constant():
        return p.scale(1 / d.constant_term()).shift(offset), ONE
    if not p.is_constant():
        _, cp, cd = _to_poly(p).cofactors(_to_poly(d))
        p, d = _from_poly(cp), _from_poly(cd)
        if d.is_constant():
            return p.scale(1 / d.constant_term()).shift(offset), ONE
    scale = _content(d)
    if d.coefficient(d.degree()) < 0:
        scale = -scale
    return p.scale(1 / scale).shift(offset), d.scale(1 / scale)


class RFunc:
    """A normalized quotient of Laurent polynomials in t"""

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE, normalized: bool = False):
        num = HalfLaurent.coerce(num)
        den = HalfLaurent.coerce(den)
        if not normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value) -> "RFunc":
        if isinstance(value, RFunc):
            return value
        if isinstance(value, HalfLaurent):
            return RFunc(value, ONE, normalized=True)
        if isinstance(value, (int, Fraction)):
            return RFunc(HalfLaurent.constant(value), ONE, normalized=True)
        if isinstance(value, Cyclo) and value.is_rational():
            return RFunc(HalfLaurent.constant(value.to_fraction()), ONE, normalized=True)
        return NotImplemented

    @classmethod
    def q_power_quotient(cls, num_coeffs, den_coeffs) -> "RFunc":
        """Build from q-coefficient lists (q^0 first) of numerator and denominator"""
        return cls(HalfLaurent.from_q_coefficients(num_coeffs), HalfLaurent.from_q_coefficients(den_coeffs))

    # Arithmetic

    def __add__(self, other):
        other = RFunc.coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RFunc(self.num + other.num, self.den)
        return RFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RFunc":
        return RFunc(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = RFunc.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RFunc.coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RFunc(ZERO, ONE, normalized=True)
        if self.den == ONE and other.den == ONE:
            return RFunc(self.num * other.num, ONE, normalized=True)
        return RFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RFunc.coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RFunc.coerce(other) / self

    def __pow__(self, k: int) -> "RFunc":
        if k < 0:
            return RFunc(ONE) / (self ** -k)
        return RFunc(self.num ** k, self.den ** k)

    def shift(self, k: int) -> "RFunc":
        """Multiply by t^k"""
        return RFunc(self.num.shift(k), self.den, normalized=True)

    def bar(self) -> "RFunc":
        """Substitute t -> -t^-1"""
        return RFunc(self.num.bar(), self.den.bar())

    def eps_bar(self) -> "RFunc":
        return RFunc(self.num.eps_bar(), self.den.eps_bar())

    # Predicates and conversions

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def is_polynomial_in_q(self) -> bool:
        return self.is_laurent() and (self.num.is_zero() or self.num.valuation() >= 0) \
            and self.num.has_only_even_exponents()

    def to_laurent(self) -> HalfLaurent:
        if not self.is_laurent():
            raise DenominatorError(
                "Denominator did not cancel",
                {"value": self.render(ascii_only=True)},
            )
        return self.num

    def q_degree(self) -> Fraction:
        """deg(num) - deg(den), in powers of q"""
        if self.num.is_zero():
            raise ValueError("Degree of zero")
        return Fraction(self.num.degree() - self.den.degree(), 2)

    def to_series(self, order: int) -> TruncSeries:
        """Expand in ascending powers of t up to q^order"""
        d0 = self.den.constant_term()
        if not d0:
            raise SeriesError("Denominator vanishes at q = 0")
        if self.num.is_zero():
            return TruncSeries(ZERO, order)
        top = 2 * order
        low = self.num.valuation()
        den_terms = [(j, c) for j, c in self.den.items() if j > 0]
        out = {}
        for e in range(low, top + 1):
            acc = self.num.coefficient(e)
            for j, c in den_terms:
                prev = out.get(e - j)
                if prev:
                    acc -= c * prev
            if acc:
                out[e] = acc / d0
        return TruncSeries(HalfLaurent(out), order)

    def eval_at_root(self, nu: Fraction):
        """Substitute t = exp(pi i nu) exactly"""
        d = self.den.eval_at_root(nu)
        if d.is_zero():
            raise PoleError(f"Pole at t = exp(pi i {nu})", {"value": self.render(ascii_only=True)})
        return self.num.eval_at_root(nu) / d

    def evaluate_q(self, q: int) -> Fraction:
        d = self.den.evaluate_q(q)
        if not d:
            raise PoleError(f"Pole at q = {q}")
        return self.num.evaluate_q(q) / d

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        other = RFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"RFunc({self.render(ascii_only=True)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, ascii_only: bool = False) -> str:
        if self.is_laurent():
            return self.num.render(ascii_only)
        num = self.num.render(ascii_only)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num} / ({self.den.render(ascii_only)})"

    def signed_render(self, ascii_only: bool = False) -> Tuple[bool, str]:
        if self.is_laurent():
            return self.num.signed_render(ascii_only)
        return False, f"({self.render(ascii_only)})"

    def to_json(self) -> Union[str, dict]:
        return self.render(ascii_only=True)

    @classmethod
    def parse(cls, text: str) -> "RFunc":
        num_text, sep, den_text = text.strip().rpartition(" / ")
        if not sep:
            return cls(HalfLaurent.parse(text))
        return cls(HalfLaurent.parse(num_text), HalfLaurent.parse(den_text))


def one_minus_q_power(k: int) -> RFunc:
    """1 - q^k"""
    return RFunc(HalfLaurent({0: 1, 2 * k: -1}), ONE, normalized=True)
