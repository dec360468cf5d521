"""
Laurent polynomials in t = q^(1/2).

A HalfLaurent maps integer t-exponents to coefficients. Coefficients are
Fractions, or Cyclo numbers for the irrational dihedral types; rational Cyclo
values are stored as Fractions so that equal polynomials compare equal.
"""
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from braidtrace.exactmath.cyclo import Cyclo, half_root, normalize_scalar

Coeff = Union[Fraction, Cyclo]

MINUS = "−"
DOT = "·"


def q_power_text(e: int) -> str:
    """Render t^e as a power of q: q, q^2, q^(-1), q^(3/2)"""
    if e == 0:
        return ""
    if e % 2 == 0:
        k = e // 2
        if k == 1:
            return "q"
        return f"q^{k}" if k > 0 else f"q^({k})"
    return f"q^({e}/2)"


def _coeff_text(c: Coeff) -> str:
    if isinstance(c, Cyclo):
        return f"({c})"
    return str(c)


class HalfLaurent:
    """Finitely supported mapping t-exponent -> coefficient"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, object]] = None):
        clean: Dict[int, Coeff] = {}
        if terms:
            for e, c in terms.items():
                c = normalize_scalar(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean

    # Constructors

    @classmethod
    def constant(cls, c) -> "HalfLaurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "HalfLaurent":
        return cls({e: c})

    @classmethod
    def t(cls) -> "HalfLaurent":
        return cls({1: 1})

    @classmethod
    def from_q_coefficients(cls, coeffs) -> "HalfLaurent":
        """Polynomial in q from a list of coefficients, q^0 first"""
        return cls({2 * i: c for i, c in enumerate(coeffs)})

    @staticmethod
    def coerce(value) -> "HalfLaurent":
        if isinstance(value, HalfLaurent):
            return value
        if isinstance(value, (int, Fraction, Cyclo)):
            return HalfLaurent.constant(value)
        return NotImplemented

    # Accessors

    @property
    def terms(self) -> Dict[int, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Coeff]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, e: int) -> Coeff:
        return self._terms.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Coeff:
        return self.coefficient(0)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("Valuation of the zero polynomial")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("Degree of the zero polynomial")
        return max(self._terms)

    def has_rational_coefficients(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._terms.values())

    def has_only_even_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    # Arithmetic

    def __add__(self, other):
        other = HalfLaurent.coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, object] = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = HalfLaurent.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = HalfLaurent.coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("Only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return HalfLaurent({-e * -k: (1 / c) ** -k})
        result = HalfLaurent.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "HalfLaurent":
        return HalfLaurent({e: v * c for e, v in self._terms.items()})

    def shift(self, k: int) -> "HalfLaurent":
        """Multiply by t^k"""
        return HalfLaurent({e + k: c for e, c in self._terms.items()})

    def divide_exact_monomial(self, e: int, c) -> "HalfLaurent":
        return HalfLaurent({k - e: v / c for k, v in self._terms.items()})

    def bar(self) -> "HalfLaurent":
        """Substitute t -> -t^-1"""
        return HalfLaurent({-e: (c if e % 2 == 0 else -c) for e, c in self._terms.items()})

    def eps_bar(self) -> "HalfLaurent":
        """Substitute t -> t^-1, the bar map composed with the sign twist t -> -t"""
        return HalfLaurent({-e: c for e, c in self._terms.items()})

    def substitute_t(self, value):
        """Evaluate at a scalar value of t (Fraction or Cyclo)"""
        total = Fraction(0)
        for e, c in self._terms.items():
            total = total + c * (value ** e)
        return normalize_scalar(total)

    def at_t1(self):
        """Specialization t = 1"""
        total = Fraction(0)
        for c in self._terms.values():
            total = total + c
        return normalize_scalar(total)

    def evaluate_q(self, q: int) -> Fraction:
        """Evaluate at an integer value of q; only whole powers of q allowed"""
        if not self.has_only_even_exponents():
            raise ValueError(f"{self} involves half-integer powers of q")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += Fraction(c) * Fraction(q) ** (e // 2)
        return total

    def eval_at_root(self, nu: Fraction):
        """Substitute t = exp(pi i nu); returns a Cyclo"""
        n, k = half_root(Fraction(nu))
        total = Cyclo.rational(0, n)
        for e, c in self._terms.items():
            total = total + Cyclo.root(n, k * e) * c
        return total

    def map_coefficients(self, fn) -> "HalfLaurent":
        return HalfLaurent({e: fn(c) for e, c in self._terms.items()})

    # Comparison

    def __eq__(self, other) -> bool:
        other = HalfLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render(ascii_only=True)})"

    def __str__(self) -> str:
        return self.render()

    # Rendering

    def _term_texts(self, ascii_only: bool):
        dot = "*" if ascii_only else DOT
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            negative = isinstance(c, Fraction) and c < 0
            mag = -c if negative else c
            power = q_power_text(e)
            if not power:
                body = _coeff_text(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{_coeff_text(mag)}{dot}{power}"
            yield negative, body

    def render(self, ascii_only: bool = False) -> str:
        if not self._terms:
            return "0"
        minus = "-" if ascii_only else MINUS
        out = []
        for i, (negative, body) in enumerate(self._term_texts(ascii_only)):
            if i == 0:
                out.append(f"{minus}{body}" if negative else body)
            else:
                out.append(f" {minus} {body}" if negative else f" + {body}")
        return "".join(out)

    def signed_render(self, ascii_only: bool = False) -> Tuple[bool, str]:
        """(negative, body) for a single-term polynomial, else (False, "(...)")"""
        if len(self._terms) == 1:
            (negative, body), = self._term_texts(ascii_only)
            return negative, body
        return False, f"({self.render(ascii_only)})"

    def to_json(self) -> Dict[str, object]:
        return {
            str(e): (c.to_json() if isinstance(c, Cyclo) else str(c))
            for e, c in sorted(self._terms.items())
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "HalfLaurent":
        return cls({
            int(e): (Cyclo.from_json(c) if isinstance(c, dict) else Fraction(c))
            for e, c in data.items()
        })

    @classmethod
    def parse(cls, text: str) -> "HalfLaurent":
        """Parse the rendered form back; rational coefficients only"""
        s = text.replace(MINUS, "-").replace(DOT, "*").replace(" ", "")
        if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
            s = s[1:-1]
        if s in ("", "0"):
            return cls()
        terms: Dict[int, Fraction] = {}
        for sign, body in _split_terms(s):
            if "q" in body:
                coeff_text, _, power_text = body.partition("q")
                coeff_text = coeff_text.rstrip("*")
                coeff = Fraction(coeff_text) if coeff_text else Fraction(1)
                if power_text:
                    if not power_text.startswith("^"):
                        raise ValueError(f"Malformed term: {body}")
                    exponent = Fraction(power_text[1:].strip("()"))
                else:
                    exponent = Fraction(1)
                if (2 * exponent).denominator != 1:
                    raise ValueError(f"Exponent {exponent} is not a half-integer")
                e = int(2 * exponent)
            else:
                coeff = Fraction(body)
                e = 0
            terms[e] = terms.get(e, Fraction(0)) + sign * coeff
        return cls(terms)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _split_terms(s: str):
    """Split at top-level + and - signs"""
    depth = 0
    sign = 1
    start = 0
    pieces = []
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            if i > start:
                pieces.append((sign, s[start:i]))
            sign = 1 if ch == "+" else -1
            start = i + 1
    if start < len(s):
        pieces.append((sign, s[start:]))
    return pieces


ZERO = HalfLaurent()
ONE = HalfLaurent.constant(1)
T = HalfLaurent.t()
T_INV = HalfLaurent.monomial(-1)
# t - t^-1, the quadratic-relation constant
DELTA = T - T_INV
