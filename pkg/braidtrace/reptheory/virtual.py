"""
Virtual characters: finitely supported maps from irreducible labels to
coefficients (rationals, cyclotomic numbers, Laurent polynomials, rational
functions or truncated series).
"""
from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple

from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.cyclo import Cyclo
from braidtrace.exactmath.laurent import DOT, HalfLaurent, MINUS
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.exactmath.series import TruncSeries
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.labels import Label, dimension, eps_twist, irreducibles, label_key, label_text, parse_label


def _is_zero(c) -> bool:
    if isinstance(c, TruncSeries):
        return c.coeffs.is_zero()
    return not c


def _signed_text(c, ascii_only: bool) -> Tuple[bool, str]:
    if isinstance(c, (HalfLaurent, RFunc)):
        return c.signed_render(ascii_only)
    if isinstance(c, Fraction):
        return c < 0, str(abs(c))
    if isinstance(c, int):
        return c < 0, str(abs(c))
    if isinstance(c, TruncSeries):
        return False, f"({c.render(ascii_only)})"
    return False, f"({c})"


def _coefficient_json(c):
    if isinstance(c, (HalfLaurent, TruncSeries)):
        return c.render(ascii_only=True)
    if isinstance(c, RFunc):
        return c.to_json()
    if isinstance(c, Cyclo):
        return c.to_json()
    return str(c)


class VirtualCharacter:
    """sum over irreducibles psi of coeffs[psi] * psi"""

    __slots__ = ("system", "_coeffs")

    def __init__(self, system: CoxeterSystem, coeffs: Optional[Mapping[Label, object]] = None):
        self.system = system
        self._coeffs: Dict[Label, object] = {
            label: c for label, c in (coeffs or {}).items() if not _is_zero(c)
        }

    @classmethod
    def irreducible(cls, system: CoxeterSystem, label: Label, coeff=1) -> "VirtualCharacter":
        return cls(system, {label: coeff})

    @property
    def coeffs(self) -> Dict[Label, object]:
        return dict(self._coeffs)

    def labels(self):
        return [label for label in irreducibles(self.system) if label in self._coeffs]

    def items(self) -> Iterator[Tuple[Label, object]]:
        for label in self.labels():
            yield label, self._coeffs[label]

    def coefficient(self, label: Label, default=0):
        """(label, self)_W"""
        return self._coeffs.get(label, default)

    def __getitem__(self, label: Label):
        return self.coefficient(label)

    def is_zero(self) -> bool:
        return not self._coeffs

    # Ring structure

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self._coeffs)
        for label, c in other._coeffs.items():
            out[label] = out[label] + c if label in out else c
        return VirtualCharacter(self.system, out)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter(self.system, {label: -c for label, c in self._coeffs.items()})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def scale(self, value) -> "VirtualCharacter":
        return VirtualCharacter(self.system, {label: c * value for label, c in self._coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, VirtualCharacter):
            return self.scale(other)
        table = character_table(self.system)
        out: Dict[Label, object] = {}
        for phi, a in self._coeffs.items():
            for psi, b in other._coeffs.items():
                ab = a * b
                for chi, mult in table.tensor(phi, psi).items():
                    term = ab * mult
                    out[chi] = out[chi] + term if chi in out else term
        return VirtualCharacter(self.system, out)

    __rmul__ = scale

    def eps_twist(self) -> "VirtualCharacter":
        return VirtualCharacter(
            self.system, {eps_twist(self.system, label): c for label, c in self._coeffs.items()}
        )

    def map(self, fn: Callable) -> "VirtualCharacter":
        return VirtualCharacter(self.system, {label: fn(c) for label, c in self._coeffs.items()})

    def bar(self) -> "VirtualCharacter":
        return self.map(lambda c: c.bar())

    def inner(self, other: "VirtualCharacter"):
        total = 0
        for label, c in self._coeffs.items():
            if label in other._coeffs:
                total = c * other._coeffs[label] + total
        return total

    def dimension(self):
        total = 0
        for label, c in self._coeffs.items():
            total = c * dimension(self.system, label) + total
        return total

    # Comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        if self.system != other.system or set(self._coeffs) != set(other._coeffs):
            return False
        return all(self._coeffs[label] == other._coeffs[label] for label in self._coeffs)

    def __hash__(self) -> int:
        return hash((self.system, frozenset(self._coeffs)))

    # Rendering

    def render(self, ascii_only: bool = False) -> str:
        if not self._coeffs:
            return "0"
        dot = "*" if ascii_only else DOT
        minus = "-" if ascii_only else MINUS
        out = []
        for i, (label, c) in enumerate(self.items()):
            negative, body = _signed_text(c, ascii_only)
            name = label_text(label)
            term = name if body == "1" else f"{body}{dot}{name}"
            if i == 0:
                out.append(f"{minus}{term}" if negative else term)
            else:
                out.append(f" {minus} {term}" if negative else f" + {term}")
        return "".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"VirtualCharacter({self.system.label}: {self.render(ascii_only=True)})"

    def to_json(self) -> Dict[str, object]:
        return {label_key(label): _coefficient_json(c) for label, c in self.items()}

    @classmethod
    def from_json(cls, system: CoxeterSystem, data: Mapping[str, object]) -> "VirtualCharacter":
        coeffs = {}
        for key, value in data.items():
            label = parse_label(system, key)
            if isinstance(value, dict):
                coeffs[label] = Cyclo.from_json(value)
                continue
            parsed = RFunc.parse(str(value))
            coeffs[label] = parsed.num if parsed.is_laurent() else parsed
        return cls(system, coeffs)
