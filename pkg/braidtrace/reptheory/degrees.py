"""
Generic degrees, Schur elements and the a/A/content invariants.
"""
from fractions import Fraction
from functools import lru_cache

from braidtrace.core.exceptions import ConsistencyError, FourierDataError, SlopeError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord, lift_sigma
from braidtrace.coxeter.regular import regular_element_of_order, regular_elements
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.cyclo import normalize_scalar
from braidtrace.exactmath.laurent import HalfLaurent, ZERO
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.hecke.algebra import braid_image
from braidtrace.reptheory.characters import hecke_char, trace_table
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.fourier import fourier_table
from braidtrace.reptheory.labels import Label, dimension, irreducibles, label_key
from braidtrace.reptheory.molien import fake_degree, invariant_denominator
from braidtrace.schemas.results import DegreesRecord


def content(system: CoxeterSystem, label: Label) -> int:
    return character_table(system).content(label)


@lru_cache(maxsize=None)
def generic_degree(system: CoxeterSystem, label: Label) -> HalfLaurent:
    """Deg_phi = sum_psi {phi, psi} Feg_psi"""
    table = fourier_table(system)
    deg = ZERO
    for psi, c in table.row(label).items():
        deg = deg + fake_degree(system, psi).scale(c)
    if deg.is_zero():
        raise FourierDataError("Generic degree vanishes", {"type": system.label, "label": label_key(label)})
    return deg


def schur_element(system: CoxeterSystem, label: Label) -> RFunc:
    """s(phi_q) = s(1_q) / Deg_phi with s(1_q) the Poincare polynomial"""
    return RFunc(system.poincare_polynomial(), generic_degree(system, label))


def schur_element_direct(system: CoxeterSystem, label: Label) -> HalfLaurent:
    """(1/phi(1)) sum_w phi_q(sigma_w) phi_q(sigma_w^-1)"""
    traces = trace_table(system, label)
    total = ZERO
    for w, value in traces.items():
        total = total + value * traces[system.inverse(w)]
    return total.scale(Fraction(1, dimension(system, label)))


def a_value(system: CoxeterSystem, label: Label) -> int:
    return generic_degree(system, label).valuation() // 2


def big_a_value(system: CoxeterSystem, label: Label) -> int:
    return generic_degree(system, label).degree() // 2


def degrees_bundle(system: CoxeterSystem, label: Label) -> DegreesRecord:
    deg = generic_degree(system, label)
    a, big_a = a_value(system, label), big_a_value(system, label)
    c = content(system, label)
    if c != system.N - a - big_a:
        logger.error(f"Content identity fails for {label_key(label)} of {system.label}")
        raise ConsistencyError("content != N - a - A", {
            "label": label_key(label), "content": c, "a": a, "A": big_a, "N": system.N,
        })
    return DegreesRecord(
        label=label_key(label),
        feg=fake_degree(system, label),
        deg=deg,
        schur=schur_element(system, label),
        a=a,
        A=big_a,
        content=c,
    )


def molien_schur_identity(system: CoxeterSystem, label: Label) -> bool:
    """1/s(phi_q) = (1 - q)^r sum_psi {phi, psi} m_psi(q)"""
    table = fourier_table(system)
    den = invariant_denominator(system)
    total = RFunc()
    for psi, c in table.row(label).items():
        total = total + RFunc(fake_degree(system, psi), den) * c
    one_minus_q = RFunc(HalfLaurent({0: 1, 2: -1}))
    return 1 / schur_element(system, label) == total * one_minus_q ** system.rank


def tau_via_schur(system: CoxeterSystem, word: BraidWord) -> RFunc:
    """sum_phi phi_q(beta) / s(phi_q)"""
    total = RFunc()
    for label in irreducibles(system):
        total = total + RFunc(hecke_char(system, label, word)) / schur_element(system, label)
    return total


def schur_orthogonality_holds(system: CoxeterSystem) -> bool:
    """tau = sum_phi phi_q / s(phi_q) on every sigma_w"""
    for w in system.elements():
        word = lift_sigma(system, w)
        if tau_via_schur(system, word) != RFunc(braid_image(system, word).tau()):
            return False
    return True


def fake_degree_regular_identity(system: CoxeterSystem, d: int) -> bool:
    """phi(w) = Feg_phi(zeta_d) for every phi and every zeta_d-regular class"""
    table = character_table(system)
    classes = regular_elements(system, d)
    if not classes:
        raise SlopeError(f"{system.label} has no regular elements of order {d}", {"d": d})
    for label in irreducibles(system):
        at_root = fake_degree(system, label).eval_at_root(Fraction(1, d))
        for key in classes:
            if not (at_root - table.value(label, key)).is_zero():
                logger.debug(f"{system.label}: Feg of {label_key(label)} at zeta_{d} differs from its value at {key}")
                return False
    return True


def periodic_character_identity(system: CoxeterSystem, d: int) -> bool:
    """phi_q(beta) = q^(content/d) phi(w) for the periodic lift beta of a zeta_d-regular w"""
    w = regular_element_of_order(system, d)
    word = lift_sigma(system, w)
    table = character_table(system)
    for label in irreducibles(system):
        value = hecke_char(system, label, word)
        chi = normalize_scalar(table.value(label, system.class_of(w)))
        exponent = Fraction(2 * content(system, label), d)
        if exponent.denominator != 1:
            # a non-integral q-power leaves only the zero trace
            expected = ZERO
            if chi != 0:
                return False
        else:
            expected = HalfLaurent.monomial(int(exponent), chi)
        if value != expected:
            logger.debug(f"{system.label}: periodic character of {label_key(label)} at d={d} "
                         f"is {value.render(ascii_only=True)}")
            return False
    return True
