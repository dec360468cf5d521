"""
The Iwahori-Hecke algebra H_W in the standard basis {sigma_w}.

Quadratic relation (sigma_s - t)(sigma_s + t^-1) = 0 with t = q^(1/2), so
sigma_w sigma_s = sigma_ws if ws > w and sigma_ws + (t - t^-1) sigma_w otherwise.
"""
from typing import Dict, Mapping, Optional

from braidtrace.core.exceptions import SystemMismatchError
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import CoxeterSystem, Elem
from braidtrace.exactmath.laurent import DELTA, HalfLaurent, ONE, ZERO


class HeckeElement:
    """Finitely supported mapping w -> HalfLaurent coefficient of sigma_w"""

    __slots__ = ("system", "_coeffs")

    def __init__(self, system: CoxeterSystem, coeffs: Optional[Mapping[Elem, object]] = None):
        self.system = system
        clean: Dict[Elem, HalfLaurent] = {}
        for w, c in (coeffs or {}).items():
            c = HalfLaurent.coerce(c)
            if c:
                clean[w] = c
        self._coeffs = clean

    @classmethod
    def unit(cls, system: CoxeterSystem) -> "HeckeElement":
        return cls(system, {system.identity: ONE})

    @property
    def coeffs(self) -> Dict[Elem, HalfLaurent]:
        return dict(self._coeffs)

    def coefficient(self, w: Elem) -> HalfLaurent:
        return self._coeffs.get(w, ZERO)

    def support(self):
        return sorted(self._coeffs, key=lambda w: (self.system.length(w), self.system.reduced_word(w)))

    def _check(self, other: "HeckeElement") -> None:
        if other.system != self.system:
            raise SystemMismatchError(
                "Hecke elements belong to different systems",
                {"left": self.system.label, "right": other.system.label},
            )

    def right_mul_gen(self, i: int, inverse: bool = False) -> "HeckeElement":
        """self * sigma_i, or self * sigma_i^-1"""
        sys = self.system
        out: Dict[Elem, HalfLaurent] = {}
        for w, c in self._coeffs.items():
            ws = sys.right_mul_gen(w, i)
            out[ws] = out.get(ws, ZERO) + c
            if sys.descent_right(w, i):
                out[w] = out.get(w, ZERO) + c * DELTA
        result = HeckeElement(sys, out)
        if inverse:
            # sigma_s^-1 = sigma_s - (t - t^-1)
            result = result - self.scale(DELTA)
        return result

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.system, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.system, {w: -c for w, c in self._coeffs.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.system, {w: v * c for w, v in self._coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        self._check(other)
        total = HeckeElement(self.system)
        for w, c in other._coeffs.items():
            part = self
            for i in self.system.reduced_word(w):
                part = part.right_mul_gen(i)
            total = total + part.scale(c)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.system == other.system and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.system, frozenset(self._coeffs.items())))

    def is_zero(self) -> bool:
        return not self._coeffs

    def tau(self) -> HalfLaurent:
        return self.coefficient(self.system.identity)

    def specialize_t1(self) -> Dict[Elem, object]:
        """Image in the group algebra Q[W]"""
        out = {}
        for w, c in self._coeffs.items():
            value = c.at_t1()
            if value:
                out[w] = value
        return out

    def render(self, ascii_only: bool = False) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for w in self.support():
            word = self.system.reduced_word(w)
            name = "1" if not word else "T[" + ",".join(str(i) for i in word) + "]"
            parts.append(f"({self._coeffs[w].render(ascii_only)})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HeckeElement({self.system.label}: {self.render(ascii_only=True)})"


def sigma(system: CoxeterSystem, w: Elem) -> HeckeElement:
    return HeckeElement(system, {w: ONE})


def braid_image(system: CoxeterSystem, word: BraidWord) -> HeckeElement:
    word.validate(system)
    h = HeckeElement.unit(system)
    for x in word.letters:
        h = h.right_mul_gen(abs(x), inverse=x < 0)
    return h


def tau(h: HeckeElement) -> HalfLaurent:
    return h.tau()


def commutator(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a * b - b * a
