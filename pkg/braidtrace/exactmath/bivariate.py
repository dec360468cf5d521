"""
Two-variable values in a and t = q^(1/2).

ATLaurent is a finitely supported Laurent polynomial in (a, t). ARFunc is a
Laurent polynomial in a with RFunc coefficients, divided by (1 - a^2)^k;
Markov traces live there, HOMFLY series are converted to ATLaurent when
every denominator has cancelled.
"""
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from braidtrace.core.exceptions import DenominatorError
from braidtrace.exactmath.laurent import HalfLaurent, MINUS
from braidtrace.exactmath.rfunc import RFunc


def _q_exponent_text(e: int) -> str:
    return str(e // 2) if e % 2 == 0 else f"{e}/2"


class ATLaurent:
    """Mapping (a-exponent, t-exponent) -> rational coefficient"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], object]] = None):
        self._terms: Dict[Tuple[int, int], Fraction] = {
            (int(a), int(e)): Fraction(c) for (a, e), c in (terms or {}).items() if c
        }

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    def __add__(self, other: "ATLaurent") -> "ATLaurent":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return ATLaurent(out)

    def __mul__(self, other: "ATLaurent") -> "ATLaurent":
        out: Dict[Tuple[int, int], Fraction] = {}
        for (a1, e1), c1 in self._terms.items():
            for (a2, e2), c2 in other._terms.items():
                k = (a1 + a2, e1 + e2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return ATLaurent(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ATLaurent({(0, 0): other})
        if not isinstance(other, ATLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coefficient_of_a(self, a: int) -> HalfLaurent:
        return HalfLaurent({e: c for (k, e), c in self._terms.items() if k == a})

    def render(self, ascii_only: bool = False) -> str:
        if not self._terms:
            return "0"
        dot = "*" if ascii_only else "·"
        minus = "-" if ascii_only else MINUS
        pieces = []
        for a in sorted({a for a, _ in self._terms}):
            coeff = self.coefficient_of_a(a)
            a_text = "" if a == 0 else ("a" if a == 1 else f"a^{a}" if a > 0 else f"a^({a})")
            for e, c in sorted(coeff.items()):
                negative = c < 0
                body = HalfLaurent({e: abs(c)}).render(ascii_only)
                if a_text:
                    body = a_text if body == "1" else f"{a_text}{dot}{body}"
                pieces.append((negative, body))
        out = []
        for i, (negative, body) in enumerate(pieces):
            if i == 0:
                out.append(f"{minus}{body}" if negative else body)
            else:
                out.append(f" {minus} {body}" if negative else f" + {body}")
        return "".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ATLaurent({self.render(ascii_only=True)})"

    def to_json(self) -> Dict[str, object]:
        """Keys "a<i> q<k>" with k a possibly half-integer q-exponent"""
        out = {}
        for (a, e), c in sorted(self._terms.items()):
            out[f"a{a} q{_q_exponent_text(e)}"] = int(c) if c.denominator == 1 else str(c)
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "ATLaurent":
        terms = {}
        for key, value in data.items():
            a_part, q_part = key.split()
            a = int(a_part[1:])
            e = 2 * Fraction(q_part[1:])
            terms[(a, int(e))] = Fraction(value)
        return cls(terms)


def _divide_by_one_minus_a2(coeffs: Dict[int, RFunc]) -> Optional[Dict[int, RFunc]]:
    """Exact division of sum c_i a^i by (1 - a^2), or None"""
    if not coeffs:
        return {}
    low, high = min(coeffs), max(coeffs)
    zero = RFunc()
    quotient: Dict[int, RFunc] = {}
    # c_i = m_i - m_(i-2)
    for i in range(low, high + 1):
        m = coeffs.get(i, zero) + quotient.get(i - 2, zero)
        if m:
            quotient[i] = m
    if any(i > high - 2 for i in quotient):
        return None
    return quotient


class ARFunc:
    """(sum_i c_i(t) a^i) / (1 - a^2)^k in lowest terms"""

    __slots__ = ("coeffs", "power")

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None, power: int = 0):
        clean = {int(i): RFunc.coerce(c) for i, c in (coeffs or {}).items()}
        clean = {i: c for i, c in clean.items() if c}
        while power > 0:
            reduced = _divide_by_one_minus_a2(clean)
            if reduced is None:
                break
            clean, power = reduced, power - 1
        self.coeffs: Dict[int, RFunc] = clean
        self.power = power if clean else 0

    @classmethod
    def constant(cls, value) -> "ARFunc":
        return cls({0: value})

    @classmethod
    def a_power(cls, i: int, value=1) -> "ARFunc":
        return cls({i: value})

    def _raised(self, power: int) -> Dict[int, RFunc]:
        """Numerator re-expressed over (1 - a^2)^power"""
        coeffs = dict(self.coeffs)
        for _ in range(power - self.power):
            nxt: Dict[int, RFunc] = {}
            for i, c in coeffs.items():
                nxt[i] = nxt.get(i, RFunc()) + c
                nxt[i + 2] = nxt.get(i + 2, RFunc()) - c
            coeffs = nxt
        return coeffs

    def __add__(self, other):
        if not isinstance(other, ARFunc):
            other = ARFunc.constant(other)
        power = max(self.power, other.power)
        left, right = self._raised(power), other._raised(power)
        for i, c in right.items():
            left[i] = left.get(i, RFunc()) + c
        return ARFunc(left, power)

    __radd__ = __add__

    def __neg__(self) -> "ARFunc":
        return ARFunc({i: -c for i, c in self.coeffs.items()}, self.power)

    def __sub__(self, other):
        if not isinstance(other, ARFunc):
            other = ARFunc.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ARFunc):
            return ARFunc({i: c * other for i, c in self.coeffs.items()}, self.power)
        out: Dict[int, RFunc] = {}
        for i, c in self.coeffs.items():
            for j, d in other.coeffs.items():
                out[i + j] = out.get(i + j, RFunc()) + c * d
        return ARFunc(out, self.power + other.power)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ARFunc):
            other = ARFunc.constant(other)
        return self.power == other.power and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.power, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_laurent(self) -> bool:
        return self.power == 0 and all(c.is_laurent() for c in self.coeffs.values())

    def to_atlaurent(self) -> ATLaurent:
        if not self.is_laurent():
            raise DenominatorError("Value is not a Laurent polynomial in a and t",
                                   {"value": self.render(ascii_only=True)})
        terms = {}
        for i, c in self.coeffs.items():
            laurent = c.to_laurent()
            if not laurent.has_rational_coefficients():
                raise DenominatorError("Irrational coefficient in an (a, t) polynomial")
            for e, v in laurent.items():
                terms[(i, e)] = v
        return ATLaurent(terms)

    def limit_a_infinity(self) -> RFunc:
        """Value as a^-2 -> 0; requires the a-degree to be at most 2·power"""
        if not self.coeffs:
            return RFunc()
        top = 2 * self.power
        if max(self.coeffs) > top:
            raise ValueError("No finite limit as a -> infinity")
        lead = self.coeffs.get(top, RFunc())
        return lead if self.power % 2 == 0 else -lead

    def render(self, ascii_only: bool = False) -> str:
        if not self.coeffs:
            return "0"
        dot = "*" if ascii_only else "·"
        pieces = []
        for i in sorted(self.coeffs):
            body = self.coeffs[i].render(ascii_only)
            if len(self.coeffs[i].num.terms) > 1 or not self.coeffs[i].is_laurent():
                body = f"({body})"
            if i:
                a_text = "a" if i == 1 else (f"a^{i}" if i > 0 else f"a^({i})")
                body = a_text if body == "1" else f"{body}{dot}{a_text}"
            pieces.append(body)
        numerator = " + ".join(pieces)
        if self.power == 0:
            return numerator
        minus = "-" if ascii_only else MINUS
        den = f"(1 {minus} a^2)" + (f"^{self.power}" if self.power > 1 else "")
        return f"[{numerator}] / {den}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ARFunc({self.render(ascii_only=True)})"
