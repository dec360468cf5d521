"""
Springer-regular elements and the classification of rational slopes.

An element w is zeta-regular when its zeta-eigenspace in the reflection
representation is not contained in any reflection hyperplane. Regularity is
invariant under conjugation, so one representative per class is tested.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from braidtrace.core.exceptions import ConsistencyError, ValidationError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import simple_normal_form
from braidtrace.coxeter.systems import ClassKey, CoxeterSystem, Elem
from braidtrace.exactmath.cyclo import Cyclo
from braidtrace.schemas.results import SlopeReport

Vector = Tuple


def _cycles(perm: Sequence[int]) -> List[List[int]]:
    """Cycles as lists of 0-based positions, following i -> w(i)"""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = perm[j] - 1
        out.append(cycle)
    return out


def _eigenbasis_type_a(w: Elem, d: int, p: int) -> List[Vector]:
    """Basis of the zeta_d^p eigenspace of w on {x : sum x = 0}"""
    size = len(w)
    cycles = _cycles(w)
    basis = []
    if d == 1:
        # constant on cycles, total sum zero
        first = cycles[0]
        for cycle in cycles[1:]:
            vec = [Cyclo.rational(0)] * size
            for i in cycle:
                vec[i] = Cyclo.rational(Fraction(1, len(cycle)))
            for i in first:
                vec[i] = vec[i] - Fraction(1, len(first))
            basis.append(tuple(vec))
        return basis
    zeta_inv = Cyclo.root(d, -p)
    for cycle in cycles:
        if len(cycle) % d:
            continue
        # (w.x)_(w(i)) = x_i, so x_(w(i)) = zeta^-1 x_i on an eigenvector
        vec = [Cyclo.rational(0)] * size
        value = Cyclo.rational(1)
        for i in cycle:
            vec[i] = value
            value = value * zeta_inv
        basis.append(tuple(vec))
    return basis


def _eigenbasis_dihedral(system: CoxeterSystem, w: Elem, d: int, p: int) -> List[Vector]:
    """Basis in coordinates (u, v) = (z, conj z); rot k: (w^k u, w^-k v), ref k: (u, v) -> (w^k v, w^-k u)"""
    m = system.m
    zeta = Cyclo.root(d, p)
    kind, k = w
    if kind == "rot":
        basis = []
        if Cyclo.root(m, k) == zeta:
            basis.append((Cyclo.rational(1), Cyclo.rational(0)))
        if Cyclo.root(m, -k) == zeta:
            basis.append((Cyclo.rational(0), Cyclo.rational(1)))
        return basis
    if zeta == 1:
        return [(Cyclo.root(m, k), Cyclo.rational(1))]
    if zeta == -1:
        return [(-Cyclo.root(m, k), Cyclo.rational(1))]
    return []


def _hyperplane_functionals(system: CoxeterSystem) -> List[Vector]:
    if system.is_type_a:
        size = system.rank + 1
        out = []
        for i in range(size):
            for j in range(i + 1, size):
                f = [Cyclo.rational(0)] * size
                f[i] = Cyclo.rational(1)
                f[j] = Cyclo.rational(-1)
                out.append(tuple(f))
        return out
    m = system.m
    # the fixed line of ref j has angle pi j / m
    return [(Cyclo.root(2 * m, -j), -Cyclo.root(2 * m, j)) for j in range(m)]


def _pairing(f: Vector, v: Vector) -> Cyclo:
    total = Cyclo.rational(0)
    for a, b in zip(f, v):
        if a and b:
            total = total + a * b
    return total


def eigenbasis(system: CoxeterSystem, w: Elem, d: int, p: int = 1) -> List[Vector]:
    if system.is_type_a:
        return _eigenbasis_type_a(w, d, p)
    return _eigenbasis_dihedral(system, w, d, p)


def is_regular_element(system: CoxeterSystem, w: Elem, d: int, p: int = 1) -> bool:
    """True iff w has a zeta_d^p-eigenvector off every reflection hyperplane"""
    basis = eigenbasis(system, w, d, p)
    if not basis:
        return False
    for f in _hyperplane_functionals(system):
        if all(_pairing(f, b).is_zero() for b in basis):
            return False
    return True


@lru_cache(maxsize=None)
def regular_elements(system: CoxeterSystem, d: int) -> Tuple[ClassKey, ...]:
    """Classes of zeta_d-regular elements (zeta_d primitive)"""
    found = tuple(
        key for key in system.classes()
        if is_regular_element(system, system.class_representative(key), d)
    )
    logger.debug(f"{system.label}: {len(found)} regular classes of order {d}")
    return found


@lru_cache(maxsize=None)
def _classify_denominator(system: CoxeterSystem, d: int) -> Tuple[Tuple[int, ...], bool, bool, Tuple[ClassKey, ...]]:
    indices = tuple(i for i, deg in enumerate(system.degrees) if deg % d == 0)
    regular = regular_elements(system, d)
    elliptic = any(system.fixed_dim(system.class_representative(c)) == 0 for c in regular)
    return indices, bool(regular), elliptic, regular


def is_regular_slope(system: CoxeterSystem, nu: Fraction) -> SlopeReport:
    nu = Fraction(nu)
    d = nu.denominator
    indices, regular, elliptic, classes = _classify_denominator(system, d)
    flags = []
    if indices:
        flags.append("singular")
    if regular:
        flags.append("regular")
    if elliptic:
        flags.append("regular-elliptic")
    if len(indices) == 1:
        flags.append("cuspidal")
    return SlopeReport(
        type=system.label,
        slope=str(nu),
        denominator=d,
        singular_degrees=[system.degrees[i] for i in indices],
        classification=flags[-1] if flags else "nonsingular",
        flags=flags or ["nonsingular"],
        regular_classes=[str(c) for c in classes],
    )


def regular_numbers(system: CoxeterSystem, limit: int) -> List[int]:
    return [d for d in range(1, limit + 1) if regular_elements(system, d)]


def _bipartite_word(system: CoxeterSystem, repeats: int) -> Tuple[int, ...]:
    """(x y)^repeats with x, y the products of the odd and of the even generators"""
    odd = tuple(i for i in system.generators if i % 2)
    even = tuple(i for i in system.generators if not i % 2)
    return (odd + even) * repeats


def _candidate_words(system: CoxeterSystem, d: int) -> List[Tuple[int, ...]]:
    """Known reduced words of d-th roots of pi"""
    words = []
    if d == 2:
        words.append(system.reduced_word(system.w0))
    h = system.coxeter_number
    if h % d == 0:
        words.append(_bipartite_word(system, h // d))
    if system.is_type_a and d == system.rank:
        # sigma_1 ... sigma_n sigma_1 is conjugate to sigma_1^2 sigma_2 ... sigma_n
        words.append(tuple(system.generators) + (1,))
    return words


def _is_root_of_full_twist(system: CoxeterSystem, w: Elem, d: int) -> bool:
    return simple_normal_form(system, [w] * d) == (system.w0, system.w0)


def _elements_of_length(system: CoxeterSystem, length: int) -> List[Elem]:
    layer = {system.identity}
    for _ in range(length):
        layer = {
            system.right_mul_gen(w, i)
            for w in layer for i in system.generators if not system.descent_right(w, i)
        }
    return sorted(layer)


@lru_cache(maxsize=None)
def regular_element_of_order(system: CoxeterSystem, d: int) -> Elem:
    """A zeta_d-regular w whose positive lift is a d-th root of the full twist (d >= 2)"""
    classes = regular_elements(system, d)
    if d < 2 or not classes:
        raise ValidationError(f"{system.label} has no periodic regular elements of order {d}",
                              {"type": system.label, "d": d})
    length, rest = divmod(2 * system.N, d)
    if rest:
        raise ConsistencyError(f"2N is not divisible by the regular number {d}", {"type": system.label})
    for word in _candidate_words(system, d):
        w = system.from_word(word)
        if system.length(w) != len(word) or system.class_of(w) not in classes:
            continue
        if _is_root_of_full_twist(system, w, d):
            return w
    logger.debug(f"{system.label}: searching length {length} for a periodic element of order {d}")
    for w in _elements_of_length(system, length):
        if system.class_of(w) in classes and _is_root_of_full_twist(system, w, d):
            return w
    logger.error(f"{system.label}: no lift of a regular element of order {d} is periodic")
    raise ConsistencyError("No periodic lift of a regular element", {"type": system.label, "d": d})
