"""
Total Springer representations Q_mu in type A from Kostka-Foulkes polynomials,

    Q_mu = sum_lambda q^n(mu) K_{lambda,mu}(q^-1) chi^lambda,

with (1, ..., 1) the class of the identity, and the decomposition of Tr0 in
the basis {Q_mu}.
"""
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from braidtrace.core.exceptions import DecompositionError, UnsupportedTypeError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.exactmath.laurent import HalfLaurent, ONE, ZERO
from braidtrace.exactmath.rfunc import RFunc, one_minus_q_power
from braidtrace.reptheory.labels import conjugate_partition, irreducibles, label_key
from braidtrace.reptheory.molien import sym_character
from braidtrace.reptheory.virtual import VirtualCharacter

MAX_SPRINGER_RANK = 3

Partition = Tuple[int, ...]
Tableau = List[List[int]]


def n_statistic(mu: Sequence[int]) -> int:
    """n(mu) = sum (i - 1) mu_i"""
    return sum(i * part for i, part in enumerate(mu))


def _horizontal_strips(shape: Partition, size: int, bound: Partition):
    """Shapes nu inside bound with nu / shape a horizontal strip of the given size"""
    rows = len(bound)
    padded = list(shape) + [0] * (rows - len(shape))

    def extend(i: int, left: int, current: List[int]):
        if i == rows:
            if left == 0:
                yield tuple(x for x in current if x)
            return
        cap = bound[i] if i == 0 else min(bound[i], padded[i - 1])
        for add in range(min(left, cap - padded[i]) + 1):
            yield from extend(i + 1, left - add, current + [padded[i] + add])

    yield from extend(0, size, [])


def semistandard_tableaux(shape: Partition, content: Partition) -> List[Tableau]:
    """SSYT of the given shape and content, as lists of rows"""
    out = []

    def fill(letter: int, inner: Partition, rows: Tableau):
        if letter > len(content):
            if inner == tuple(shape):
                out.append([list(r) for r in rows])
            return
        for outer in _horizontal_strips(inner, content[letter - 1], shape):
            grown = [list(r) for r in rows] + [[] for _ in range(len(outer) - len(rows))]
            for i, length in enumerate(outer):
                grown[i] += [letter] * (length - len(grown[i]))
            fill(letter + 1, outer, grown)

    fill(1, (), [])
    return out


def reading_word(tableau: Tableau) -> List[int]:
    """Rows from bottom to top, each read left to right"""
    return [x for row in reversed(tableau) for x in row]


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content"""
    letters = list(word)
    used = [False] * len(letters)
    total = 0
    while not all(used):
        top = max(x for x, u in zip(letters, used) if not u)
        pos = max(i for i, x in enumerate(letters) if x == 1 and not used[i])
        used[pos] = True
        index = 0
        for r in range(2, top + 1):
            left = [i for i in range(pos - 1, -1, -1) if letters[i] == r and not used[i]]
            if left:
                pos = left[0]
            else:
                index += 1
                pos = max(i for i, x in enumerate(letters) if x == r and not used[i])
            used[pos] = True
            total += index
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(lam: Partition, mu: Partition) -> HalfLaurent:
    """K_{lambda,mu}(q) as a polynomial in q = t^2"""
    total = ZERO
    for tableau in semistandard_tableaux(lam, mu):
        total = total + HalfLaurent.monomial(2 * charge(reading_word(tableau)))
    return total


def _check_supported(system: CoxeterSystem) -> None:
    if not system.is_type_a or system.rank > MAX_SPRINGER_RANK:
        raise UnsupportedTypeError(f"Springer tables cover A(1)..A({MAX_SPRINGER_RANK}), not {system.label}")


@lru_cache(maxsize=None)
def _springer_table(system: CoxeterSystem) -> Tuple[Tuple[Partition, VirtualCharacter], ...]:
    _check_supported(system)
    rows = []
    for mu in irreducibles(system):
        shift = 2 * n_statistic(mu)
        coeffs = {}
        for lam in irreducibles(system):
            k = kostka_foulkes(lam, mu)
            if k:
                # K has only whole powers of q, so bar is q -> q^-1
                coeffs[lam] = k.bar().shift(shift)
        rows.append((mu, VirtualCharacter(system, coeffs)))
    logger.debug(f"Built the Springer table of {system.label}")
    return tuple(rows)


def springer_table(system: CoxeterSystem) -> Dict[Partition, VirtualCharacter]:
    """Q_mu per unipotent class mu"""
    return dict(_springer_table(system))


def springer_decompose(system: CoxeterSystem, tr0: VirtualCharacter) -> Dict[Partition, HalfLaurent]:
    """Coefficients c_mu with tr0 = sum c_mu Q_mu"""
    table = springer_table(system)
    remainder: Dict[Partition, HalfLaurent] = {}
    for label, c in tr0.items():
        value = RFunc.coerce(c)
        if not value.is_laurent():
            raise DecompositionError("Only Laurent traces decompose over Z[q^(1/2), q^(-1/2)]",
                                     {"label": label_key(label), "value": value.render(ascii_only=True)})
        remainder[label] = value.to_laurent()
    out: Dict[Partition, HalfLaurent] = {}
    # increasing lexicographic order refines dominance, starting from the identity class
    for mu in sorted(table):
        lead = remainder.get(mu, ZERO)
        if not lead:
            continue
        c = lead.shift(-2 * n_statistic(mu))
        out[mu] = c
        for lam, q_coeff in table[mu].items():
            remainder[lam] = remainder.get(lam, ZERO) - c * q_coeff
    leftover = {label_key(k): v.render(ascii_only=True) for k, v in remainder.items() if v}
    if leftover:
        logger.error(f"Springer decomposition left a remainder in {system.label}: {leftover}")
        raise DecompositionError("Trace is not a combination of the Q_mu", leftover)
    return out


def gl_order(n: int) -> HalfLaurent:
    """|GL_n(q)|"""
    total = HalfLaurent.monomial(n * (n - 1))
    for k in range(1, n + 1):
        total = total * (HalfLaurent.monomial(2 * k) - ONE)
    return total


def centralizer_size(mu: Partition) -> HalfLaurent:
    """|Z_GL(u_mu)| = q^(sum mu'_i^2) prod_i prod_(j <= m_i) (1 - q^-j)"""
    exponent = sum(c * c for c in conjugate_partition(mu))
    total = ONE
    for part in set(mu):
        for j in range(1, mu.count(part) + 1):
            exponent -= j
            total = total * (HalfLaurent.monomial(2 * j) - ONE)
    return total.shift(2 * exponent)


def class_size(mu: Partition) -> HalfLaurent:
    """Number of unipotents of Jordan type mu in GL_n(q)"""
    return RFunc(gl_order(sum(mu)), centralizer_size(mu)).to_laurent()


def q1_identity(system: CoxeterSystem) -> bool:
    """[Sym V]_q = ((-1)^r / |SL_(r+1)(q)|) q^N Q_1"""
    _check_supported(system)
    q_one = springer_table(system)[(1,) * (system.rank + 1)]
    den = RFunc(ONE)
    for k in range(2, system.rank + 2):
        den = den * one_minus_q_power(k)
    expected = q_one.map(lambda c: RFunc(c) / den)
    return sym_character(system) == expected


def orthogonality_identity(system: CoxeterSystem) -> bool:
    """q^N phi * eps Q_1 = sum_mu |C_mu(q)| (Q_mu, phi) Q_mu for every phi"""
    _check_supported(system)
    table = springer_table(system)
    eps_q_one = table[(1,) * (system.rank + 1)].eps_twist()
    for phi in irreducibles(system):
        lhs = (VirtualCharacter.irreducible(system, phi) * eps_q_one).scale(HalfLaurent.monomial(2 * system.N))
        rhs = VirtualCharacter(system)
        for mu, q_mu in table.items():
            weight = q_mu.coefficient(phi, ZERO)
            if weight:
                rhs = rhs + q_mu.scale(class_size(mu) * weight)
        if lhs != rhs:
            logger.error(f"Springer orthogonality fails for {label_key(phi)} in {system.label}")
            return False
    return True
