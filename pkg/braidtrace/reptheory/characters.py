"""
Irreducible characters phi_q of the Hecke algebra evaluated on braids.
"""
from fractions import Fraction
from typing import Dict

from braidtrace.core.exceptions import ConsistencyError, IntegralityError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord, full_twist
from braidtrace.coxeter.systems import CoxeterSystem, Elem
from braidtrace.exactmath.laurent import HalfLaurent, ZERO
from braidtrace.hecke.algebra import braid_image
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.labels import Label
from braidtrace.reptheory.matrixrep import element_traces, matrix_rep


def _check_integral(system: CoxeterSystem, label: Label, word: BraidWord, value: HalfLaurent) -> None:
    shifted = value.shift(word.writhe)
    if not shifted.has_only_even_exponents():
        raise IntegralityError(
            "Hecke character has half-integer q-powers after the writhe shift",
            {"type": system.label, "label": str(label), "braid": str(word)},
        )
    if system.is_type_a and any(Fraction(c).denominator != 1 for _, c in value.items()):
        raise IntegralityError(
            "Hecke character of type A has non-integral coefficients",
            {"label": str(label), "value": value.render(ascii_only=True)},
        )


def hecke_char(system: CoxeterSystem, label: Label, word: BraidWord) -> HalfLaurent:
    """phi_q(beta): trace of the matrix image of the braid"""
    word.validate(system)
    value = matrix_rep(system, label).trace(word.letters)
    _check_integral(system, label, word, value)
    return value


def trace_table(system: CoxeterSystem, label: Label) -> Dict[Elem, HalfLaurent]:
    """phi_q(sigma_w) for every w in W"""
    return element_traces(system, label)


def hecke_char_via_basis(system: CoxeterSystem, label: Label, word: BraidWord) -> HalfLaurent:
    """phi_q(beta) from the sigma_w expansion of beta and the per-element trace table"""
    table = trace_table(system, label)
    total = ZERO
    for w, c in braid_image(system, word).coeffs.items():
        total = total + c * table[w]
    return total


def full_twist_scalar(system: CoxeterSystem, label: Label) -> HalfLaurent:
    """The scalar by which the full twist acts on phi_q"""
    rep = matrix_rep(system, label)
    image = rep.image(full_twist(system).letters)
    if not rep.is_scalar(image):
        logger.error(f"Full twist is not scalar on {label} of {system.label}")
        raise ConsistencyError("Full twist does not act by a scalar", {"label": str(label)})
    return rep.to_laurent(image[0, 0])


def full_twist_scalar_check(system: CoxeterSystem, label: Label) -> bool:
    """pi acts on phi_q by q^content(phi)"""
    try:
        scalar = full_twist_scalar(system, label)
    except ConsistencyError:
        return False
    return scalar == HalfLaurent.monomial(2 * character_table(system).content(label))


def w_specialization_matches(system: CoxeterSystem, label: Label) -> bool:
    """phi_q(sigma_w) at t = 1 equals phi(w) for every w"""
    table = character_table(system)
    for w, value in trace_table(system, label).items():
        if value.at_t1() != table.value(label, system.class_of(w)):
            return False
    return True
