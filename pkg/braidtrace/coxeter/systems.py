"""
Finite Coxeter systems of types A(n) and I2(m).

Elements are canonical tuples: the one-line notation of a permutation of
1..n+1 for A(n), and ("rot", k) = (st)^k or ("ref", k) = (st)^k s for I2(m).
Products compose right to left: (uv)(i) = u(v(i)).
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Sequence, Tuple

from braidtrace.core.config import settings
from braidtrace.core.exceptions import SizeGuardError, UnsupportedTypeError
from braidtrace.core.logger import logger
from braidtrace.exactmath.cyclo import Cyclo
from braidtrace.exactmath.laurent import HalfLaurent

Elem = tuple
ClassKey = tuple

MAX_A_RANK = 8
MIN_DIHEDRAL = 3
MAX_DIHEDRAL = 12


def partitions(n: int, largest: int = None) -> List[Tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order"""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def cycle_type(perm: Sequence[int]) -> Tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_i i^(m_i) m_i!"""
    z = 1
    for part in set(mu):
        mult = list(mu).count(part)
        z *= part ** mult * factorial(mult)
    return z


def _poly_divide_exact(num: List[int], den: List[int]) -> List[int]:
    """Integer polynomial division (lowest degree first), remainder must vanish"""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = Fraction(num[i + len(den) - 1], den[-1])
        if c.denominator != 1:
            raise ArithmeticError("Inexact integer polynomial division")
        out[i] = int(c)
        for j, d in enumerate(den):
            num[i + j] -= out[i] * d
    if any(num):
        raise ArithmeticError("Nonzero remainder in polynomial division")
    return out


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class CoxeterSystem:
    """A(n) with n <= 8 (A(0) only as a parabolic), or I2(m) with 3 <= m <= 12"""

    family: str
    param: int

    def __post_init__(self):
        if self.family == "A":
            if not 0 <= self.param <= MAX_A_RANK:
                raise UnsupportedTypeError(f"A({self.param}) is not supported", {"max_rank": MAX_A_RANK})
        elif self.family == "I2":
            if not MIN_DIHEDRAL <= self.param <= MAX_DIHEDRAL:
                raise UnsupportedTypeError(f"I2({self.param}) is not supported",
                                           {"range": [MIN_DIHEDRAL, MAX_DIHEDRAL]})
        else:
            raise UnsupportedTypeError(f"Unknown Coxeter family: {self.family}")

    # Basic data

    @property
    def is_type_a(self) -> bool:
        return self.family == "A"

    @property
    def label(self) -> str:
        return f"{self.family}({self.param})"

    def __str__(self) -> str:
        return self.label

    @property
    def rank(self) -> int:
        return self.param if self.is_type_a else 2

    @property
    def m(self) -> int:
        return self.param

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def coxeter_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        r = self.rank
        rows = []
        for i in range(1, r + 1):
            row = []
            for j in range(1, r + 1):
                if i == j:
                    row.append(1)
                elif self.is_type_a:
                    row.append(3 if abs(i - j) == 1 else 2)
                else:
                    row.append(self.m)
            rows.append(tuple(row))
        return tuple(rows)

    @property
    def degrees(self) -> Tuple[int, ...]:
        if self.is_type_a:
            return tuple(range(2, self.param + 2))
        return (2, self.m)

    @property
    def N(self) -> int:
        return sum(d - 1 for d in self.degrees)

    @property
    def order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    @property
    def coxeter_number(self) -> int:
        return max(self.degrees) if self.degrees else 1

    @property
    def conductor(self) -> int:
        """n with Q_W inside Q(zeta_n)"""
        if self.is_type_a or self.m in (3, 4, 6):
            return 1
        return self.m

    # Group law

    @property
    def identity(self) -> Elem:
        if self.is_type_a:
            return tuple(range(1, self.param + 2))
        return ("rot", 0)

    def gen(self, i: int) -> Elem:
        return self.right_mul_gen(self.identity, i)

    def mul(self, u: Elem, v: Elem) -> Elem:
        if self.is_type_a:
            return tuple(u[x - 1] for x in v)
        m = self.m
        (ku, a), (kv, b) = u, v
        if ku == "rot":
            return (kv, (a + b) % m)
        return ("ref" if kv == "rot" else "rot", (a - b) % m)

    def inverse(self, w: Elem) -> Elem:
        if self.is_type_a:
            inv = [0] * len(w)
            for i, x in enumerate(w):
                inv[x - 1] = i + 1
            return tuple(inv)
        kind, k = w
        return ("rot", (-k) % self.m) if kind == "rot" else w

    def right_mul_gen(self, w: Elem, i: int) -> Elem:
        if self.is_type_a:
            lst = list(w)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            return tuple(lst)
        s = ("ref", 0) if i == 1 else ("ref", self.m - 1)
        return self.mul(w, s)

    def left_mul_gen(self, i: int, w: Elem) -> Elem:
        if self.is_type_a:
            return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
        return self.mul(self.gen(i), w)

    def length(self, w: Elem) -> int:
        if self.is_type_a:
            return sum(1 for a, b in combinations(w, 2) if a > b)
        kind, k = w
        m = self.m
        if kind == "rot":
            return 2 * min(k, m - k)
        return min(2 * k + 1, 2 * (m - k) - 1)

    def descent_right(self, w: Elem, i: int) -> bool:
        if self.is_type_a:
            return w[i - 1] > w[i]
        return self.length(self.right_mul_gen(w, i)) < self.length(w)

    def descent_left(self, w: Elem, i: int) -> bool:
        return self.descent_right(self.inverse(w), i)

    def left_descents(self, w: Elem) -> List[int]:
        return [i for i in self.generators if self.descent_left(w, i)]

    def right_descents(self, w: Elem) -> List[int]:
        return [i for i in self.generators if self.descent_right(w, i)]

    @property
    def w0(self) -> Elem:
        if self.is_type_a:
            return tuple(range(self.param + 1, 0, -1))
        m = self.m
        return ("rot", m // 2) if m % 2 == 0 else ("ref", (m - 1) // 2)

    def reduced_word(self, w: Elem) -> Tuple[int, ...]:
        """Lexicographically least reduced word"""
        word = []
        while self.length(w) > 0:
            i = self.left_descents(w)[0]
            word.append(i)
            w = self.left_mul_gen(i, w)
        return tuple(word)

    def from_word(self, word: Sequence[int]) -> Elem:
        w = self.identity
        for i in word:
            w = self.right_mul_gen(w, abs(i))
        return w

    def elements(self) -> List[Elem]:
        """All of W, identity first, in breadth-first order"""
        return list(_elements(self))

    def is_reflection(self, w: Elem) -> bool:
        if self.is_type_a:
            return cycle_type(w)[:1] == (2,) and cycle_type(w).count(2) == 1
        return w[0] == "ref"

    def reflections(self) -> List[Elem]:
        return [w for w in self.elements() if self.is_reflection(w)]

    # Conjugacy classes and eigenvalue data on the reflection representation

    def class_of(self, w: Elem) -> ClassKey:
        if self.is_type_a:
            return cycle_type(w)
        kind, k = w
        if kind == "rot":
            return ("rot", min(k, self.m - k))
        return ("ref", k % 2 if self.m % 2 == 0 else 0)

    def classes(self) -> List[ClassKey]:
        if self.is_type_a:
            return list(reversed(partitions(self.param + 1)))
        rot = [("rot", k) for k in range(self.m // 2 + 1)]
        ref = [("ref", 0), ("ref", 1)] if self.m % 2 == 0 else [("ref", 0)]
        return rot + ref

    def class_representative(self, key: ClassKey) -> Elem:
        if self.is_type_a:
            perm = []
            start = 1
            for part in key:
                cycle = list(range(start, start + part))
                perm.extend(cycle[1:] + cycle[:1])
                start += part
            return tuple(perm)
        return key

    def class_size(self, key: ClassKey) -> int:
        if self.is_type_a:
            return factorial(self.param + 1) // centralizer_order(key)
        kind, k = key
        if kind == "rot":
            return 1 if k == 0 or 2 * k == self.m else 2
        return self.m // 2 if self.m % 2 == 0 else self.m

    def reflection_classes(self) -> List[ClassKey]:
        return [c for c in self.classes() if self.is_reflection(self.class_representative(c))]

    def char_poly(self, key: ClassKey) -> HalfLaurent:
        """det(1 - q w | V) as a polynomial in q (even t-exponents)"""
        return _char_poly(self, key)

    def exterior_traces(self, key: ClassKey) -> List:
        """[e_0, ..., e_r]: elementary symmetric functions of the eigenvalues of w on V"""
        return _exterior_traces(self, key)

    def fixed_dim(self, w: Elem) -> int:
        """dim V^w"""
        if self.is_type_a:
            return len(cycle_type(w)) - 1
        kind, k = w
        if kind == "ref":
            return 1
        return 2 if k == 0 else 0

    def poincare_polynomial(self) -> HalfLaurent:
        """sum_w q^l(w), via the product formula prod (1 - q^d)/(1 - q)"""
        coeffs = [1]
        for d in self.degrees:
            coeffs = _poly_mul(coeffs, [1] * d)
        return HalfLaurent.from_q_coefficients(coeffs)

    # Parabolic subgroups

    def parabolic(self, J: Sequence[int]) -> Tuple["CoxeterSystem", Dict[int, int]]:
        """Subsystem generated by a connected generator subset, with generator map"""
        J = tuple(sorted(J))
        if not J:
            return CoxeterSystem("A", 0), {}
        if any(j not in self.generators for j in J):
            raise UnsupportedTypeError(f"{J} is not a set of generators of {self.label}")
        if self.is_type_a:
            if J != tuple(range(J[0], J[0] + len(J))):
                raise UnsupportedTypeError("Only connected parabolic subgroups are supported", {"J": J})
            return CoxeterSystem("A", len(J)), {k + 1: j for k, j in enumerate(J)}
        if len(J) == 2:
            return self, {1: 1, 2: 2}
        return CoxeterSystem("A", 1), {1: J[0]}

    def embed(self, sub: "CoxeterSystem", gen_map: Dict[int, int], w: Elem) -> Elem:
        return self.from_word([gen_map[i] for i in sub.reduced_word(w)])


@lru_cache(maxsize=None)
def _elements(system: CoxeterSystem) -> Tuple[Elem, ...]:
    if system.order > settings.MAX_GROUP_ORDER:
        logger.warning(f"Refusing to enumerate {system.label}: order {system.order}")
        raise SizeGuardError(
            f"|W| = {system.order} exceeds the enumeration limit",
            {"limit": settings.MAX_GROUP_ORDER},
        )
    seen = {system.identity}
    order = [system.identity]
    queue = deque(order)
    while queue:
        w = queue.popleft()
        for i in system.generators:
            v = system.right_mul_gen(w, i)
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    logger.debug(f"Enumerated {len(order)} elements of {system.label}")
    return tuple(order)


@lru_cache(maxsize=None)
def _char_poly(system: CoxeterSystem, key: ClassKey) -> HalfLaurent:
    if system.is_type_a:
        perm = [1]
        for part in key:
            perm = _poly_mul(perm, [1] + [0] * (part - 1) + [-1])
        return HalfLaurent.from_q_coefficients(_poly_divide_exact(perm, [1, -1]))
    kind, k = key
    if kind == "ref":
        return HalfLaurent.from_q_coefficients([1, 0, -1])
    trace = Cyclo.cos_sum(system.m, k)
    return HalfLaurent({0: 1, 2: -trace, 4: 1})


@lru_cache(maxsize=None)
def _exterior_traces(system: CoxeterSystem, key: ClassKey) -> Tuple:
    if system.is_type_a:
        # det(1 + x w | perm) = prod over cycles of (1 - (-x)^l), then divide by (1 + x)
        perm = [1]
        for part in key:
            factor = [0] * (part + 1)
            factor[0] = 1
            factor[part] = -((-1) ** part)
            perm = _poly_mul(perm, factor)
        return tuple(Fraction(c) for c in _poly_divide_exact(perm, [1, 1]))
    kind, k = key
    if kind == "ref":
        return (Fraction(1), Fraction(0), Fraction(-1))
    trace = Cyclo.cos_sum(system.m, k)
    return (Fraction(1), trace.to_fraction() if trace.is_rational() else trace, Fraction(1))


def type_a(n: int) -> CoxeterSystem:
    return CoxeterSystem("A", n)


def dihedral(m: int) -> CoxeterSystem:
    return CoxeterSystem("I2", m)
