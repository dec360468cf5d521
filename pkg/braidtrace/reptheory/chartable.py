"""
Ordinary character tables of W.

Type A uses the Murnaghan-Nakayama rule on beta-sets; dihedral groups use
the closed formulas (rotation by k acts on phi_j with trace
zeta_m^(jk) + zeta_m^(-jk), reflections have trace 0).
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from braidtrace.core.exceptions import IntegralityError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import ClassKey, CoxeterSystem
from braidtrace.exactmath.cyclo import Cyclo, normalize_scalar, sum_cyclo
from braidtrace.reptheory.labels import (
    DELTA_LABEL, EPS_DELTA_LABEL, Label, SIGN, TRIVIAL, dimension, irreducibles, phi_index,
)


def _beta_set(mu: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(mu)
    return tuple(part + length - 1 - i for i, part in enumerate(mu))


@lru_cache(maxsize=None)
def _mn_value(beta: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    """Murnaghan-Nakayama: strip rim hooks of length cycles[0] by sliding beads"""
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = tuple(sorted((beads - {b}) | {target}, reverse=True))
        total += (-1) ** height * _mn_value(moved, rest)
    return total


def symmetric_character(mu: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    return _mn_value(_beta_set(mu), tuple(cycle_type))


def _dihedral_value(system: CoxeterSystem, label: str, key: ClassKey):
    m = system.m
    kind, k = key
    if label == TRIVIAL:
        return Fraction(1)
    if label == SIGN:
        return Fraction(1 if kind == "rot" else -1)
    if label in (DELTA_LABEL, EPS_DELTA_LABEL):
        if kind == "rot":
            return Fraction((-1) ** k)
        # the class ("ref", 0) contains s
        value = 1 if k == 0 else -1
        return Fraction(value if label == DELTA_LABEL else -value)
    if kind == "ref":
        return Fraction(0)
    return normalize_scalar(Cyclo.cos_sum(m, phi_index(label) * k))


def char_value(system: CoxeterSystem, label: Label, key: ClassKey):
    """phi(w) for w in the class key; a Fraction, or a Cyclo when irrational"""
    if system.is_type_a:
        return Fraction(symmetric_character(label, key))
    return _dihedral_value(system, label, key)


class CharacterTable:
    """Values phi(C) for every irreducible phi and conjugacy class C"""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.labels: List[Label] = irreducibles(system)
        self.classes: List[ClassKey] = system.classes()
        self.class_sizes: Dict[ClassKey, int] = {c: system.class_size(c) for c in self.classes}
        self.values: Dict[Tuple[Label, ClassKey], object] = {
            (phi, c): char_value(system, phi, c) for phi in self.labels for c in self.classes
        }
        self._tensor: Dict[Tuple[Label, Label], Dict[Label, int]] = {}
        logger.debug(f"Built character table of {system.label}: {len(self.labels)} irreducibles")

    def value(self, label: Label, key: ClassKey):
        return self.values[(label, key)]

    def row(self, label: Label) -> Dict[ClassKey, object]:
        return {c: self.values[(label, c)] for c in self.classes}

    def degree(self, label: Label) -> int:
        return dimension(self.system, label)

    def inner(self, f: Dict[ClassKey, object], g: Dict[ClassKey, object]):
        """(f, g)_W for real-valued class functions"""
        total = sum_cyclo([self.class_sizes[c] * f[c] * g[c] for c in self.classes])
        return normalize_scalar(total / self.system.order)

    def decompose(self, f: Dict[ClassKey, object]) -> Dict[Label, object]:
        """Multiplicities of each irreducible in a class function"""
        out = {}
        for phi in self.labels:
            c = self.inner(f, self.row(phi))
            if c:
                out[phi] = c
        return out

    def tensor(self, phi: Label, psi: Label) -> Dict[Label, int]:
        """phi tensor psi as a sum of irreducibles with integer multiplicities"""
        key = (phi, psi) if self.labels.index(phi) <= self.labels.index(psi) else (psi, phi)
        if key not in self._tensor:
            product = {c: self.values[(phi, c)] * self.values[(psi, c)] for c in self.classes}
            mult = {}
            for chi, value in self.decompose(product).items():
                if isinstance(value, Cyclo) or Fraction(value).denominator != 1:
                    raise IntegralityError(
                        "Non-integral tensor multiplicity",
                        {"phi": str(phi), "psi": str(psi), "chi": str(chi), "value": str(value)},
                    )
                mult[chi] = int(value)
            self._tensor[key] = mult
        return self._tensor[key]

    def content(self, label: Label) -> int:
        """(1/phi(1)) sum over reflections t of phi(t)"""
        total = sum_cyclo([
            self.class_sizes[c] * self.values[(label, c)] for c in self.system.reflection_classes()
        ])
        value = total / self.degree(label)
        if isinstance(value, Cyclo) or value.denominator != 1:
            raise IntegralityError("Content is not an integer", {"label": str(label), "value": str(value)})
        return int(value)

    def is_orthonormal(self) -> bool:
        for i, phi in enumerate(self.labels):
            for psi in self.labels[i:]:
                expected = 1 if phi == psi else 0
                if self.inner(self.row(phi), self.row(psi)) != expected:
                    return False
        return True


@lru_cache(maxsize=None)
def character_table(system: CoxeterSystem) -> CharacterTable:
    return CharacterTable(system)


def char_table(system: CoxeterSystem) -> Dict[Tuple[Label, ClassKey], object]:
    return dict(character_table(system).values)
