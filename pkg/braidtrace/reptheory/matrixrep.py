"""
Explicit matrix representations of the Hecke algebra.

Type A uses the seminormal form on standard Young tableaux: with axial
distance r = c(i+1) - c(i) (content c = column - row) and
f(r) = (t - t^-1) / (1 - t^(-2r)), sigma_i acts on v_T by t when i, i+1 share
a row, by -t^-1 when they share a column, and otherwise mixes v_T with
v_T' (T' = T with i, i+1 swapped) as

    sigma_i v_T = f(r) v_T + v_T'                    (r < 0)
    sigma_i v_T = f(r) v_T + (1 + f(r) f(-r)) v_T'   (r > 0)

Entries live in sympy's field QQ(t). Dihedral representations are 2x2 with
Laurent entries over Q(zeta_m):

    sigma_s = [[-t^-1, 0], [1, t]],  sigma_t = [[t, mu_j], [0, -t^-1]]

with mu_j = 2 + zeta_m^j + zeta_m^-j.
"""
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.fields import field

from braidtrace.core.exceptions import DenominatorError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import CoxeterSystem, Elem
from braidtrace.exactmath.cyclo import Cyclo, normalize_scalar, to_fraction
from braidtrace.exactmath.laurent import HalfLaurent, ONE, T, T_INV, ZERO
from braidtrace.reptheory.labels import (
    DELTA_LABEL, EPS_DELTA_LABEL, Label, SIGN, TRIVIAL, dimension, phi_index,
)

_K, _t = field("t", QQ)

Tableau = Tuple[Tuple[int, int], ...]


def standard_tableaux(shape: Sequence[int]) -> List[Tableau]:
    """All standard Young tableaux of a shape, as positions (row, col) of 1..n"""
    n = sum(shape)
    out: List[Tableau] = []

    def grow(filled: List[int], positions: List[Tuple[int, int]]):
        if len(positions) == n:
            out.append(tuple(positions))
            return
        for row, length in enumerate(shape):
            col = filled[row]
            if col >= length:
                continue
            if row > 0 and filled[row - 1] <= col:
                continue
            filled[row] += 1
            positions.append((row, col))
            grow(filled, positions)
            positions.pop()
            filled[row] -= 1

    grow([0] * len(shape), [])
    return out


def _axial_factor(r: int):
    return (_t - 1 / _t) / (1 - _t ** (-2 * r))


def frac_to_laurent(value) -> HalfLaurent:
    """Convert an element of QQ(t) whose denominator is a monomial"""
    if isinstance(value, int):
        return HalfLaurent.constant(value)
    num, den = value.numer, value.denom
    den_terms = den.terms()
    if len(den_terms) != 1:
        raise DenominatorError("Hecke character value kept a denominator", {"value": str(value)})
    (shift,), scale = den_terms[0]
    scale = to_fraction(scale)
    return HalfLaurent({e - shift: to_fraction(c) / scale for (e,), c in num.terms()})


def _empty(dim: int, zero) -> np.ndarray:
    out = np.empty((dim, dim), dtype=object)
    out.fill(zero)
    return out


class MatrixRep:
    """Images of sigma_1, ..., sigma_r for one irreducible"""

    def __init__(self, system: CoxeterSystem, label: Label, generators: Dict[int, np.ndarray],
                 zero, one, to_laurent: Callable):
        self.system = system
        self.label = label
        self.dim = dimension(system, label)
        self.generators = generators
        self.zero = zero
        self.one = one
        self.to_laurent = to_laurent
        self._sparse = {i: self._columns(g) for i, g in generators.items()}
        delta = self.scalar(T) - self.scalar(T_INV)
        self.inverses = {i: g - self.identity() * delta for i, g in generators.items()}
        self._sparse_inv = {i: self._columns(g) for i, g in self.inverses.items()}

    def scalar(self, p: HalfLaurent):
        """Embed a Laurent polynomial into the entry ring"""
        if self.zero is ZERO:
            return p
        total = self.zero
        for e, c in p.items():
            total = total + QQ(c.numerator, c.denominator) * _t ** e
        return total

    def identity(self) -> np.ndarray:
        out = _empty(self.dim, self.zero)
        for i in range(self.dim):
            out[i, i] = self.one
        return out

    def _columns(self, g: np.ndarray):
        return [
            [(r, g[r, j]) for r in range(self.dim) if g[r, j] != self.zero]
            for j in range(self.dim)
        ]

    def _right_multiply(self, m: np.ndarray, columns) -> np.ndarray:
        out = _empty(self.dim, self.zero)
        for j, entries in enumerate(columns):
            col = out[:, j]
            for r, value in entries:
                col = col + m[:, r] * value
            out[:, j] = col
        return out

    def image(self, letters: Sequence[int]) -> np.ndarray:
        m = self.identity()
        for x in letters:
            m = self._right_multiply(m, self._sparse[x] if x > 0 else self._sparse_inv[-x])
        return m

    def trace_matrix(self, m: np.ndarray) -> HalfLaurent:
        total = self.zero
        for i in range(self.dim):
            total = total + m[i, i]
        return self.to_laurent(total)

    def trace(self, letters: Sequence[int]) -> HalfLaurent:
        return self.trace_matrix(self.image(letters))

    def is_scalar(self, m: np.ndarray) -> bool:
        first = m[0, 0]
        for i in range(self.dim):
            for j in range(self.dim):
                if m[i, j] != (first if i == j else self.zero):
                    return False
        return True

    # Sanity checks

    def satisfies_quadratic(self) -> bool:
        """(M - t)(M + t^-1) = 0 for every generator"""
        t, t_inv = self.scalar(T), self.scalar(T_INV)
        ident = self.identity()
        for g in self.generators.values():
            product = (g - ident * t).dot(g + ident * t_inv)
            if any(x != self.zero for x in product.flat):
                return False
        return True

    def satisfies_braid_relations(self) -> bool:
        mat = self.system.coxeter_matrix
        for i in self.system.generators:
            for j in self.system.generators:
                if i >= j:
                    continue
                m = mat[i - 1][j - 1]
                left = [i if k % 2 == 0 else j for k in range(m)]
                right = [j if k % 2 == 0 else i for k in range(m)]
                a, b = self.image(left), self.image(right)
                if any(x != y for x, y in zip(a.flat, b.flat)):
                    return False
        return True


def _type_a_rep(system: CoxeterSystem, shape: Tuple[int, ...]) -> MatrixRep:
    tableaux = standard_tableaux(shape)
    index = {tab: k for k, tab in enumerate(tableaux)}
    dim = len(tableaux)
    gens = {}
    for i in system.generators:
        g = _empty(dim, _K.zero)
        for a, tab in enumerate(tableaux):
            (r1, c1), (r2, c2) = tab[i - 1], tab[i]
            if r1 == r2:
                g[a, a] = _t
                continue
            if c1 == c2:
                g[a, a] = -1 / _t
                continue
            r = (c2 - r2) - (c1 - r1)
            swapped = list(tab)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            b = index[tuple(swapped)]
            g[a, a] = _axial_factor(r)
            g[b, a] = _K.one if r < 0 else 1 + _axial_factor(r) * _axial_factor(-r)
        gens[i] = g
    return MatrixRep(system, shape, gens, _K.zero, _K.one, frac_to_laurent)


def _dihedral_rep(system: CoxeterSystem, label: str) -> MatrixRep:
    neg = -T_INV
    if label.startswith("phi_"):
        mu = normalize_scalar(Cyclo.cos_sum(system.m, phi_index(label)) + 2)
        s = _empty(2, ZERO)
        s[0, 0], s[1, 0], s[1, 1] = neg, ONE, T
        t = _empty(2, ZERO)
        t[0, 0], t[0, 1], t[1, 1] = T, HalfLaurent.constant(mu), neg
        gens = {1: s, 2: t}
    else:
        values = {
            TRIVIAL: (T, T), SIGN: (neg, neg), DELTA_LABEL: (T, neg), EPS_DELTA_LABEL: (neg, T),
        }[label]
        gens = {}
        for i, v in zip((1, 2), values):
            g = _empty(1, ZERO)
            g[0, 0] = v
            gens[i] = g
    return MatrixRep(system, label, gens, ZERO, ONE, lambda x: x)


@lru_cache(maxsize=None)
def matrix_rep(system: CoxeterSystem, label: Label) -> MatrixRep:
    logger.debug(f"Building matrix representation {label} of {system.label}")
    if system.is_type_a:
        return _type_a_rep(system, label)
    return _dihedral_rep(system, label)


@lru_cache(maxsize=None)
def element_traces(system: CoxeterSystem, label: Label) -> Dict[Elem, HalfLaurent]:
    """phi_q(sigma_w) for every w, by breadth-first products sigma_v sigma_s"""
    rep = matrix_rep(system, label)
    images = {system.identity: rep.identity()}
    traces = {}
    for w in system.elements():
        if w != system.identity:
            i = system.right_descents(w)[0]
            v = system.right_mul_gen(w, i)
            images[w] = rep._right_multiply(images[v], rep._sparse[i])
        traces[w] = rep.trace_matrix(images[w])
    logger.debug(f"Tabulated {len(traces)} traces of {label} on {system.label}")
    return traces
