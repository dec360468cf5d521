"""
The R(W)-valued trace of a braid and its normalized form.

    Tr(beta)   = sum_{phi, psi} {phi, psi} phi_q(beta) psi
    Tr0(beta)  = (-t)^|beta| Tr(beta) * eps[Sym V]_q

Tr0 is exact (RFunc coefficients); series are produced only on request.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from braidtrace.core.config import settings
from braidtrace.core.exceptions import UnsupportedTypeError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord, full_twist
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.laurent import HalfLaurent, T, T_INV, ZERO
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.characters import hecke_char
from braidtrace.reptheory.fourier import fourier_table
from braidtrace.reptheory.induction import induce
from braidtrace.reptheory.labels import irreducibles, sign_label, trivial_label
from braidtrace.reptheory.molien import eps_sym_character
from braidtrace.reptheory.virtual import VirtualCharacter


@dataclass(frozen=True)
class TraceResult:
    system: CoxeterSystem
    word: BraidWord
    tr: VirtualCharacter
    tr0: VirtualCharacter

    @property
    def writhe(self) -> int:
        return self.word.writhe

    def series(self, order: Optional[int] = None) -> VirtualCharacter:
        order = settings.SERIES_ORDER if order is None else order
        return self.tr0.map(lambda c: c.to_series(order))


def rw_trace(system: CoxeterSystem, word: BraidWord) -> VirtualCharacter:
    word.validate(system)
    table = fourier_table(system)
    chars = {phi: hecke_char(system, phi, word) for phi in irreducibles(system)}
    coeffs = {}
    for psi in irreducibles(system):
        total = ZERO
        for phi, value in chars.items():
            pairing = table.entry(phi, psi)
            if pairing:
                total = total + value.scale(pairing)
        coeffs[psi] = total
    return VirtualCharacter(system, coeffs)


def normalize_trace(system: CoxeterSystem, tr: VirtualCharacter, writhe: int) -> VirtualCharacter:
    """(-t)^writhe * tr * eps[Sym V]_q"""
    for label, c in tr.items():
        if not c.has_rational_coefficients():
            raise UnsupportedTypeError(
                f"Normalized traces need rational character values; {system.label} has none here",
                {"label": str(label)},
            )
    product = tr * eps_sym_character(system)
    return product.scale(RFunc((-T) ** writhe))


def rw_trace0(system: CoxeterSystem, word: BraidWord) -> VirtualCharacter:
    return normalize_trace(system, rw_trace(system, word), word.writhe)


def trace_result(system: CoxeterSystem, word: BraidWord) -> TraceResult:
    logger.debug(f"Computing traces of [{word}] in {system.label}")
    tr = rw_trace(system, word)
    return TraceResult(system, word, tr, normalize_trace(system, tr, word.writhe))


def tau_from_trace(system: CoxeterSystem, word: BraidWord) -> RFunc:
    """tau_q(beta) = (-t^-1)^|beta| (1 - q)^r (eps, Tr0)"""
    tr0 = rw_trace0(system, word)
    one_minus_q = RFunc(HalfLaurent({0: 1, 2: -1}))
    return RFunc((-T_INV) ** word.writhe) * one_minus_q ** system.rank \
        * RFunc.coerce(tr0.coefficient(sign_label(system), RFunc()))


def kalman_identity(system: CoxeterSystem, word: BraidWord) -> bool:
    """(eps, Tr0(beta pi)) = q^N (1, Tr0(beta))"""
    left = rw_trace0(system, word + full_twist(system)).coefficient(sign_label(system), RFunc())
    right = rw_trace0(system, word).coefficient(trivial_label(system), RFunc())
    return RFunc.coerce(left) == RFunc.coerce(right) * RFunc(HalfLaurent.monomial(2 * system.N))


def eps_symmetry_holds(system: CoxeterSystem, word: BraidWord) -> bool:
    """t -> -t^-1 maps the coefficient of psi in Tr to that of eps psi"""
    tr = rw_trace(system, word)
    return tr.bar() == tr.eps_twist()


def pole_bound_holds(system: CoxeterSystem, word: BraidWord) -> bool:
    """(1 - q)^dim V^w Tr0 has polynomial coefficients, w the image of beta"""
    r = system.fixed_dim(word.image_in_w(system))
    factor = RFunc(HalfLaurent({0: 1, 2: -1})) ** r
    for _, c in rw_trace0(system, word).items():
        if not (RFunc.coerce(c) * factor).is_laurent():
            return False
    return True


def induction_compatible(system: CoxeterSystem, J: Sequence[int], word: BraidWord) -> bool:
    """Ind(Tr_W') = Tr_W and (1 - q)^-(r - r') Ind(Tr0_W') = Tr0_W for a braid of W' = W_J"""
    J = tuple(sorted(J))
    sub, gen_map = system.parabolic(J)
    big = word.relabel(gen_map)
    induced = induce(sub, system, rw_trace(sub, word), J)
    if induced != rw_trace(system, big):
        return False
    factor = RFunc(HalfLaurent({0: 1, 2: -1})) ** (system.rank - sub.rank)
    induced0 = induce(sub, system, rw_trace0(sub, word), J)
    return induced0.map(lambda c: RFunc.coerce(c) / factor) == rw_trace0(system, big).map(RFunc.coerce)
