"""
The virtual module Omega_nu = sum_phi Deg_phi(e^(2 pi i nu)) Delta_nu(phi) and
its relation to traces of periodic braids.
"""
from fractions import Fraction
from typing import Dict, Tuple

from braidtrace.core.exceptions import IntegralityError, SlopeError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord, is_periodic_witness
from braidtrace.coxeter.regular import is_regular_slope
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.daha.graded import GradedChar, verma_char
from braidtrace.exactmath.cyclo import Cyclo, normalize_scalar
from braidtrace.exactmath.laurent import HalfLaurent, ZERO
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.characters import trace_table
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.degrees import generic_degree
from braidtrace.reptheory.labels import Label, irreducibles, label_key
from braidtrace.reptheory.virtual import VirtualCharacter
from braidtrace.traces.rtrace import rw_trace0


def deg_at_root(system: CoxeterSystem, label: Label, nu: Fraction):
    """Deg_phi(e^(2 pi i nu)) exactly"""
    return normalize_scalar(generic_degree(system, label).eval_at_root(Fraction(nu)))


def omega_integrality(system: CoxeterSystem, nu: Fraction) -> Dict[Label, int]:
    """Deg_phi(zeta) for a regular slope; each must be a rational integer"""
    nu = Fraction(nu)
    if not is_regular_slope(system, nu).has("regular"):
        raise SlopeError(f"{nu} is not a regular slope for {system.label}")
    out = {}
    for label in irreducibles(system):
        value = deg_at_root(system, label, nu)
        if isinstance(value, Cyclo) or value.denominator != 1:
            logger.error(f"Deg_{label_key(label)}({nu}) = {value} is not an integer")
            raise IntegralityError("Generic degree at a regular root is not an integer",
                                   {"label": label_key(label), "value": str(value)})
        out[label] = int(value)
    return out


def omega_char(system: CoxeterSystem, nu: Fraction) -> GradedChar:
    nu = Fraction(nu)
    regular = is_regular_slope(system, nu).has("regular")
    if regular:
        weights = omega_integrality(system, nu)
    else:
        weights = {}
        for label in irreducibles(system):
            value = deg_at_root(system, label, nu)
            if isinstance(value, Cyclo):
                raise SlopeError(f"Omega at {nu} has irrational multiplicities in {system.label}",
                                 {"label": label_key(label), "value": str(value)})
            weights[label] = value
    total = GradedChar(system, nu)
    for label, weight in weights.items():
        if weight:
            total = total + verma_char(system, nu, label).scale(weight)
    return total


def periodic_trace(system: CoxeterSystem, nu: Fraction) -> VirtualCharacter:
    """sum_phi q^(nu c(phi)) Deg_phi(e^(2 pi i nu)) phi, at a regular slope"""
    nu = Fraction(nu)
    weights = omega_integrality(system, nu)
    table = character_table(system)
    coeffs = {}
    for label, weight in weights.items():
        exponent = 2 * nu * table.content(label)
        if exponent.denominator != 1:
            raise SlopeError(f"q^(nu c) is not a power of q^(1/2) at nu = {nu}", {"label": label_key(label)})
        coeffs[label] = HalfLaurent.monomial(int(exponent), weight)
    return VirtualCharacter(system, coeffs)


def omega_bridge_check(system: CoxeterSystem, word: BraidWord, nu: Fraction, witness: Tuple[int, int]) -> bool:
    """[Omega_nu]_q = t^(r - |beta|) Tr0(beta) for a periodic braid of slope nu"""
    n, m = witness
    nu = Fraction(nu)
    if Fraction(m, n) != nu:
        raise SlopeError(f"Witness {m}/{n} does not have slope {nu}")
    if not is_periodic_witness(system, word, n, m):
        raise SlopeError(f"[{word}]^{n} is not the full twist to the power {m}")
    omega = omega_char(system, nu)
    if any(s != 0 for s in omega.shifts()):
        return False
    rhs = rw_trace0(system, word).scale(RFunc(HalfLaurent.monomial(system.rank - word.writhe)))
    return omega.part(0) == rhs.map(RFunc.coerce)


def principal_series_identity(system: CoxeterSystem) -> bool:
    """sum_phi Deg_phi phi_q(sigma_w) = s(1_q) if w = 1 and 0 otherwise"""
    degs = {label: generic_degree(system, label) for label in irreducibles(system)}
    tables = {label: trace_table(system, label) for label in degs}
    poincare = system.poincare_polynomial()
    for w in system.elements():
        total = ZERO
        for label, deg in degs.items():
            total = total + deg * tables[label][w]
        if total != (poincare if w == system.identity else ZERO):
            return False
    return True
