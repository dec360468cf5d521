"""Truncated power series in q^(1/2) with an explicit truncation order."""
from dataclasses import dataclass
from fractions import Fraction

from braidtrace.exactmath.laurent import HalfLaurent, MINUS, q_power_text


def _truncate(p: HalfLaurent, order: int) -> HalfLaurent:
    return HalfLaurent({e: c for e, c in p.items() if e <= 2 * order})


@dataclass(frozen=True)
class TruncSeries:
    """Series known exactly up to and including q^order"""

    coeffs: HalfLaurent
    order: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _truncate(self.coeffs, self.order))

    def coefficient(self, q_exponent: Fraction):
        e = 2 * Fraction(q_exponent)
        if e.denominator != 1:
            raise ValueError(f"{q_exponent} is not a half-integer")
        if e > 2 * self.order:
            raise ValueError(f"q^{q_exponent} lies beyond the truncation order {self.order}")
        return self.coeffs.coefficient(int(e))

    def q_coefficients(self):
        """Coefficients of q^0 .. q^order (whole powers only)"""
        return [self.coeffs.coefficient(2 * i) for i in range(self.order + 1)]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return TruncSeries(self.coeffs + other.coeffs, min(self.order, other.order))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            order = min(self.order, other.order)
            return TruncSeries(_truncate(self.coeffs, order) * _truncate(other.coeffs, order), order)
        return TruncSeries(self.coeffs * other, self.order)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-self.coeffs, self.order)

    def render(self, ascii_only: bool = False) -> str:
        ascending = " + ".join(
            HalfLaurent({e: c}).render(ascii_only) for e, c in self.coeffs.items()
        ).replace("+ -", "- ").replace(f"+ {MINUS}", f"{MINUS} ")
        tail = f"O({q_power_text(2 * self.order + 1)})"
        return f"{ascending} + {tail}" if ascending else tail

    def __str__(self) -> str:
        return self.render()
