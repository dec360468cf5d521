"""
Molien series, fake degrees and the graded characters [Sym V]_q, Alt^i V.

Everything is summed over conjugacy classes with the common denominator
D(q) = prod_i (1 - q^d_i): for each class, det(1 - q w | V) divides D exactly.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from braidtrace.core.exceptions import ConsistencyError, IntegralityError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import ClassKey, CoxeterSystem
from braidtrace.exactmath.laurent import HalfLaurent, ONE, ZERO
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.labels import Label, eps_twist, irreducibles
from braidtrace.reptheory.virtual import VirtualCharacter


def invariant_denominator(system: CoxeterSystem) -> HalfLaurent:
    """prod_i (1 - q^d_i)"""
    out = ONE
    for d in system.degrees:
        out = out * HalfLaurent({0: 1, 2 * d: -1})
    return out


def divide_exact(num: HalfLaurent, den: HalfLaurent) -> HalfLaurent:
    """Long division of Laurent polynomials; the remainder must vanish"""
    if num.is_zero():
        return ZERO
    top, lead = den.degree(), den.coefficient(den.degree())
    floor = num.valuation() - den.valuation()
    rest = num
    quotient = {}
    while not rest.is_zero() and rest.degree() - top >= floor:
        e = rest.degree() - top
        c = rest.coefficient(rest.degree()) / lead
        quotient[e] = c
        rest = rest - den * HalfLaurent.monomial(e, c)
    if not rest.is_zero():
        raise ConsistencyError("Inexact polynomial division", {
            "numerator": num.render(ascii_only=True), "denominator": den.render(ascii_only=True),
        })
    return HalfLaurent(quotient)


@lru_cache(maxsize=None)
def _cofactors(system: CoxeterSystem) -> Dict[ClassKey, HalfLaurent]:
    """D(q) / det(1 - q w | V) for each class"""
    den = invariant_denominator(system)
    return {c: divide_exact(den, system.char_poly(c)) for c in system.classes()}


def _class_average(system: CoxeterSystem, weights: Dict[ClassKey, object]) -> HalfLaurent:
    """(1/|W|) sum_C |C| weights[C] D/det_C, checked rational"""
    table = character_table(system)
    cofactors = _cofactors(system)
    total = ZERO
    for c in system.classes():
        w = weights[c]
        if w:
            total = total + cofactors[c] * (table.class_sizes[c] * w)
    total = total.scale(Fraction(1, system.order))
    if not total.has_rational_coefficients():
        raise ConsistencyError("Molien numerator is not rational", {"type": system.label})
    return total


@lru_cache(maxsize=None)
def molien_numerator(system: CoxeterSystem, label: Label, degree: int = 0) -> HalfLaurent:
    """Numerator over D(q) of the Molien series of label, weighted by e_degree"""
    table = character_table(system)
    weights = {}
    for c in system.classes():
        e = system.exterior_traces(c)[degree]
        weights[c] = table.value(label, c) * e
    logger.debug(f"Molien numerator of {label} on {system.label}, exterior degree {degree}")
    return _class_average(system, weights)


def molien(system: CoxeterSystem, label: Label) -> RFunc:
    """m_psi(q) = (psi, Sym V)_q = (1/|W|) sum_w psi(w) / det(1 - q w)"""
    return RFunc(molien_numerator(system, label), invariant_denominator(system))


def molien_bivariate(system: CoxeterSystem, label: Label, degree: int) -> RFunc:
    """Coefficient of (-x)^degree in (1/|W|) sum_w psi(w) det(1 - x w) / det(1 - q w)"""
    if not 0 <= degree <= system.rank:
        raise ValueError(f"Exterior degree {degree} out of range for {system.label}")
    return RFunc(molien_numerator(system, label, degree), invariant_denominator(system))


@lru_cache(maxsize=None)
def fake_degree(system: CoxeterSystem, label: Label) -> HalfLaurent:
    """Feg_phi: graded multiplicity of phi in the coinvariant algebra"""
    feg = molien_numerator(system, label)
    for e, c in feg.items():
        if e < 0 or e % 2 or c.denominator != 1 or c < 0:
            raise IntegralityError("Fake degree is not a polynomial in q with natural coefficients",
                                   {"label": str(label), "value": feg.render(ascii_only=True)})
    return feg


def sym_character(system: CoxeterSystem) -> VirtualCharacter:
    """[Sym V]_q = sum_psi m_psi(q) psi"""
    return VirtualCharacter(system, {psi: molien(system, psi) for psi in irreducibles(system)})


def eps_sym_character(system: CoxeterSystem) -> VirtualCharacter:
    """eps tensor [Sym V]_q"""
    return sym_character(system).eps_twist()


@lru_cache(maxsize=None)
def alt_character(system: CoxeterSystem, degree: int) -> VirtualCharacter:
    """Alt^degree V as a sum of irreducibles"""
    if not 0 <= degree <= system.rank:
        raise ValueError(f"Exterior degree {degree} out of range for {system.label}")
    table = character_table(system)
    values = {c: system.exterior_traces(c)[degree] for c in system.classes()}
    coeffs = table.decompose(values)
    for label, c in coeffs.items():
        if not isinstance(c, Fraction) or c.denominator != 1:
            raise IntegralityError("Exterior power has a non-integral multiplicity", {"label": str(label)})
    return VirtualCharacter(system, coeffs)


def eps_twisted_fake_degree(system: CoxeterSystem, label: Label) -> HalfLaurent:
    return fake_degree(system, eps_twist(system, label))
