"""
Elements of the cyclotomic field Q(zeta_n), stored as coefficient vectors
in the power basis 1, zeta, ..., zeta^(d-1) with d = deg Phi_n.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, cyclotomic_poly, symbols

_x = symbols("x")

Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert sympy/gmpy rationals and Python numbers to Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    r = Rational(value)
    return Fraction(int(r.p), int(r.q))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first"""
    poly = Poly(cyclotomic_poly(n, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(coeffs: List[Fraction], n: int) -> Tuple[Fraction, ...]:
    phi = cyclotomic_coefficients(n)
    d = len(phi) - 1
    work = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c:
            # Phi_n is monic: zeta^k = -sum phi_j zeta^(k-d+j)
            for j in range(d):
                work[k - d + j] -= c * phi[j]
            work[k] = Fraction(0)
    return tuple(work[:d])


class Cyclo:
    """An exact element of Q(zeta_n)"""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[Scalar]):
        if n < 1:
            raise ValueError(f"Invalid conductor: {n}")
        self.n = n
        self.coeffs = _reduce([Fraction(c) for c in coeffs], n)

    @classmethod
    def rational(cls, value: Scalar, n: int = 1) -> "Cyclo":
        return cls(n, [Fraction(value)])

    @classmethod
    def root(cls, n: int, k: int = 1) -> "Cyclo":
        """zeta_n^k with zeta_n = exp(2 pi i / n)"""
        k %= n
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(n, coeffs)

    @classmethod
    def cos_sum(cls, n: int, k: int) -> "Cyclo":
        """zeta_n^k + zeta_n^-k"""
        return cls.root(n, k) + cls.root(n, -k)

    def lift(self, m: int) -> "Cyclo":
        """Re-express in Q(zeta_m); m must be a multiple of n"""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"Cannot lift conductor {self.n} to {m}")
        step = m // self.n
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return Cyclo(m, coeffs)

    @staticmethod
    def _coerce(other) -> "Cyclo":
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(other)
        return NotImplemented

    def _common(self, other: "Cyclo") -> Tuple["Cyclo", "Cyclo"]:
        m = lcm(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        size = max(len(a.coeffs), len(b.coeffs))
        pa = list(a.coeffs) + [Fraction(0)] * (size - len(a.coeffs))
        pb = list(b.coeffs) + [Fraction(0)] * (size - len(b.coeffs))
        return Cyclo(a.n, [x + y for x, y in zip(pa, pb)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return Cyclo(a.n, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclo.rational(1 / self.to_fraction(), self.n)
        f = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _x, domain=QQ)
        g = Poly(cyclotomic_poly(self.n, _x), _x, domain=QQ)
        inv = f.invert(g)
        return Cyclo(self.n, [to_fraction(c) for c in reversed(inv.all_coeffs())])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclo":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclo":
        """Complex conjugation zeta -> zeta^-1"""
        total = Cyclo.rational(0, self.n)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + Cyclo.root(self.n, -i) * c
        return total

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.to_fraction().denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"Cyclotomic number {self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.to_fraction())
        return hash(("cyclo-irrational",))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclo({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_fraction())
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z{self.n}^{i}")
            else:
                parts.append(f"{c}*z{self.n}^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"conductor": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclo":
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])


def normalize_scalar(value):
    """Collapse rational Cyclo values to Fraction; leave irrational ones alone"""
    if isinstance(value, Cyclo):
        return value.to_fraction() if value.is_rational() else value
    if isinstance(value, int):
        return Fraction(value)
    return value


def half_root(nu: Fraction) -> Tuple[int, int]:
    """(n, k) with exp(pi i nu) = zeta_n^k and n minimal"""
    nu = Fraction(nu)
    p, q = nu.numerator, nu.denominator
    g = gcd(p, 2 * q) if p else 2 * q
    n = (2 * q) // g
    return n, (p // g) % n


def sum_cyclo(values: Sequence) -> Union[Fraction, Cyclo]:
    total = Fraction(0)
    for v in values:
        total = total + v
    return normalize_scalar(total)
