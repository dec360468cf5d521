"""
Markov traces and HOMFLY series of braid closures.

    tr(beta) = (-t^-1)^|beta| ((1 - q)/(1 - a^2))^r sum_i (-a^2)^i (Alt^i V, Tr0(beta))

The same functional is also assembled from per-character weights obtained
from bivariate Molien series, which serves as an independent check.
"""
from functools import lru_cache

from braidtrace.core.exceptions import UnsupportedTypeError
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.bivariate import ARFunc, ATLaurent
from braidtrace.exactmath.laurent import HalfLaurent, T, T_INV
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.characters import hecke_char
from braidtrace.reptheory.fourier import fourier_table
from braidtrace.reptheory.labels import Label, irreducibles
from braidtrace.reptheory.molien import alt_character, molien_bivariate
from braidtrace.traces.rtrace import rw_trace0

_ONE_MINUS_Q = RFunc(HalfLaurent({0: 1, 2: -1}))


def alt_pairings(system: CoxeterSystem, word: BraidWord):
    """[(Alt^i V, Tr0(beta)) for i = 0..r]"""
    tr0 = rw_trace0(system, word)
    return [RFunc.coerce(alt_character(system, i).inner(tr0)) for i in range(system.rank + 1)]


def markov_trace(system: CoxeterSystem, word: BraidWord) -> ARFunc:
    r = system.rank
    prefactor = RFunc((-T_INV) ** word.writhe) * _ONE_MINUS_Q ** r
    pairings = alt_pairings(system, word)
    return ARFunc({2 * i: prefactor * p * (-1) ** i for i, p in enumerate(pairings)}, power=r)


@lru_cache(maxsize=None)
def molien_weights(system: CoxeterSystem, label: Label) -> ARFunc:
    """tr_phi = ((1 - q)/(1 - a^-2))^r sum_psi {phi, psi} m_psi(q, a^-2)"""
    r = system.rank
    table = fourier_table(system)
    coeffs = {}
    for j in range(r + 1):
        total = RFunc()
        for psi, c in table.row(label).items():
            total = total + molien_bivariate(system, psi, j) * c
        coeffs[2 * r - 2 * j] = total * _ONE_MINUS_Q ** r * (-1) ** (r + j)
    return ARFunc(coeffs, power=r)


def markov_trace_via_weights(system: CoxeterSystem, word: BraidWord) -> ARFunc:
    word.validate(system)
    total = ARFunc()
    for label in irreducibles(system):
        total = total + molien_weights(system, label) * hecke_char(system, label, word)
    return total


def markov_generator_factor() -> ARFunc:
    """tr(sigma_s) = (t - t^-1) / (1 - a^2), the stabilization factor"""
    return ARFunc({0: T - T_INV}, power=1)


def homfly(system: CoxeterSystem, word: BraidWord) -> ATLaurent:
    """[closure]_{a,q} = (a t^-1)^(|beta| - n + 1) sum_i (-a^2)^i (Alt^i V, Tr0(beta))"""
    if not system.is_type_a:
        raise UnsupportedTypeError("HOMFLY series are defined for type A only", {"type": system.label})
    if system.rank < 1:
        raise UnsupportedTypeError("HOMFLY series need at least two strands")
    shift = word.writhe - system.rank
    scale = RFunc(HalfLaurent.monomial(-shift))
    pairings = alt_pairings(system, word)
    value = ARFunc({shift + 2 * i: scale * p * (-1) ** i for i, p in enumerate(pairings)})
    return value.to_atlaurent()
