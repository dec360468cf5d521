"""
Simple spherical modules at cuspidal slopes and the torus-knot comparison.
"""
from fractions import Fraction
from math import gcd

from braidtrace.core.exceptions import IntegralityError, SlopeError, UnsupportedTypeError, ValidationError
from braidtrace.coxeter.braids import torus_braid
from braidtrace.coxeter.regular import is_regular_slope
from braidtrace.coxeter.systems import CoxeterSystem, type_a
from braidtrace.daha.graded import GradedChar, verma_char
from braidtrace.daha.omega import omega_char
from braidtrace.exactmath.bivariate import ARFunc
from braidtrace.reptheory.labels import hook_label
from braidtrace.reptheory.molien import alt_character
from braidtrace.traces.markov import homfly


def cuspidal_L_char(system: CoxeterSystem, nu: Fraction) -> GradedChar:
    """[L_nu(1)]_q = [Omega_nu]_q at a cuspidal slope"""
    nu = Fraction(nu)
    report = is_regular_slope(system, nu)
    if not report.has("cuspidal") or nu <= 0:
        raise SlopeError(f"{nu} is not a positive cuspidal slope for {system.label}",
                         {"flags": report.flags})
    if not report.has("regular-elliptic"):
        raise SlopeError(f"{nu} is cuspidal but not regular elliptic for {system.label}")
    value = omega_char(system, nu)
    if not value.has_natural_coefficients():
        raise IntegralityError("L_nu(1) is not a finite module with natural multiplicities",
                               {"type": system.label, "slope": str(nu)})
    return value


def bgg_sum(system: CoxeterSystem, nu: Fraction) -> GradedChar:
    """sum_k (-1)^k [Delta_nu(Alt^k V)]_q in type A"""
    if not system.is_type_a:
        raise UnsupportedTypeError("The exterior-power resolution is used in type A only")
    total = GradedChar(system, nu)
    for k in range(system.rank + 1):
        term = verma_char(system, nu, hook_label(system, k))
        total = total + (term if k % 2 == 0 else -term)
    return total


def gors_check(n: int, m: int) -> bool:
    """HOMFLY of the (m, n) torus knot from Tr0 and from L_{m/n}(1) agree"""
    if n < 2 or m < 2 or gcd(n, m) != 1:
        raise ValidationError("Torus knots need coprime n, m >= 2", {"n": n, "m": m})
    system = type_a(n - 1)
    link = homfly(system, torus_braid(system, m))
    simple = cuspidal_L_char(system, Fraction(m, n))
    if any(s != 0 for s in simple.shifts()):
        return False
    coeffs = {}
    offset = (m - 1) * (n - 1)
    for i in range(system.rank + 1):
        pairing = alt_character(system, i).inner(simple.part(0))
        if pairing:
            coeffs[offset + 2 * i] = pairing * (-1) ** i
    return ARFunc(coeffs).to_atlaurent() == link
