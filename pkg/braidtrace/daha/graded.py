"""
Graded characters of category O modules and standard (Verma) characters.

A graded character is stored as sum_s q^s chi_s over exact shifts
0 <= s < 1/2, each chi_s a virtual character with rational-function
coefficients in t = q^(1/2).
"""
from fractions import Fraction
from math import floor
from typing import Dict, Mapping, Optional

from braidtrace.core.config import settings
from braidtrace.core.exceptions import SystemMismatchError
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.laurent import DOT, HalfLaurent
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.labels import Label, dimension
from braidtrace.reptheory.molien import sym_character
from braidtrace.reptheory.virtual import VirtualCharacter


def split_shift(exponent: Fraction):
    """exponent = s + k/2 with 0 <= s < 1/2"""
    k = floor(2 * exponent)
    return exponent - Fraction(k, 2), k


class GradedChar:
    """sum over shifts s of q^s * parts[s]"""

    def __init__(self, system: CoxeterSystem, nu: Fraction,
                 parts: Optional[Mapping[Fraction, VirtualCharacter]] = None):
        self.system = system
        self.nu = Fraction(nu)
        self.parts: Dict[Fraction, VirtualCharacter] = {
            Fraction(s): v for s, v in (parts or {}).items() if not v.is_zero()
        }

    def _check(self, other: "GradedChar") -> None:
        if other.system != self.system:
            raise SystemMismatchError("Graded characters of different systems",
                                      {"left": self.system.label, "right": other.system.label})

    def part(self, shift: Fraction = Fraction(0)) -> VirtualCharacter:
        return self.parts.get(Fraction(shift), VirtualCharacter(self.system))

    def shifts(self):
        return sorted(self.parts)

    def __add__(self, other: "GradedChar") -> "GradedChar":
        self._check(other)
        out = dict(self.parts)
        for s, v in other.parts.items():
            out[s] = out[s] + v if s in out else v
        return GradedChar(self.system, self.nu, out)

    def __neg__(self) -> "GradedChar":
        return GradedChar(self.system, self.nu, {s: -v for s, v in self.parts.items()})

    def __sub__(self, other: "GradedChar") -> "GradedChar":
        return self + (-other)

    def scale(self, c) -> "GradedChar":
        return GradedChar(self.system, self.nu, {s: v.scale(c) for s, v in self.parts.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedChar):
            return NotImplemented
        return self.system == other.system and self.parts == other.parts

    def is_zero(self) -> bool:
        return not self.parts

    def is_laurent(self) -> bool:
        return all(c.is_laurent() for v in self.parts.values() for _, c in v.items())

    def has_natural_coefficients(self) -> bool:
        """Every coefficient is a Laurent polynomial with nonnegative integer coefficients"""
        if not self.is_laurent():
            return False
        for v in self.parts.values():
            for _, c in v.items():
                for _, x in c.num.items():
                    if x < 0 or Fraction(x).denominator != 1:
                        return False
        return True

    def coefficient(self, label: Label) -> Dict[Fraction, RFunc]:
        return {s: v.coefficient(label) for s, v in self.parts.items() if v.coefficient(label)}

    def inner(self, chi: VirtualCharacter) -> Dict[Fraction, RFunc]:
        """(chi, self) per shift"""
        out = {}
        for s, v in self.parts.items():
            value = chi.inner(v)
            if value:
                out[s] = RFunc.coerce(value)
        return out

    def dimension(self) -> Fraction:
        """Total dimension: sum psi(1) times the coefficient at q = 1"""
        total = Fraction(0)
        for v in self.parts.values():
            for label, c in v.items():
                total += dimension(self.system, label) * RFunc.coerce(c).to_laurent().at_t1()
        return total

    def series(self, order: Optional[int] = None) -> Dict[Fraction, VirtualCharacter]:
        order = settings.SERIES_ORDER if order is None else order
        return {s: v.map(lambda c: RFunc.coerce(c).to_series(order)) for s, v in self.parts.items()}

    def render(self, ascii_only: bool = False) -> str:
        if not self.parts:
            return "0"
        dot = "*" if ascii_only else DOT
        pieces = []
        for s in self.shifts():
            body = self.parts[s].render(ascii_only)
            pieces.append(body if s == 0 else f"q^({s}){dot}({body})")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GradedChar({self.system.label}, nu={self.nu}: {self.render(ascii_only=True)})"

    def to_json(self) -> Dict[str, object]:
        return {str(s): v.to_json() for s, v in sorted(self.parts.items())}


def verma_shift(system: CoxeterSystem, nu: Fraction, label: Label) -> Fraction:
    """Lowest h-weight r/2 - nu c(phi)"""
    return Fraction(system.rank, 2) - Fraction(nu) * character_table(system).content(label)


def verma_char(system: CoxeterSystem, nu: Fraction, label: Label) -> GradedChar:
    """[Delta_nu(phi)]_q = q^(r/2 - nu c(phi)) phi * [Sym V]_q"""
    s, k = split_shift(verma_shift(system, nu, label))
    body = VirtualCharacter.irreducible(system, label) * sym_character(system)
    return GradedChar(system, nu, {s: body.scale(RFunc(HalfLaurent.monomial(k)))})
