"""
Braid words and the left-greedy normal form of positive braids.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from braidtrace.core.exceptions import BraidSyntaxError, UnsupportedTypeError, ValidationError
from braidtrace.coxeter.systems import CoxeterSystem, Elem


@dataclass(frozen=True)
class BraidWord:
    """Signed generator indices: i is sigma_i, -i is sigma_i^-1"""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(x == 0 for x in self.letters):
            raise BraidSyntaxError("Braid letters must be nonzero", {"letters": list(self.letters)})

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __mul__(self, k: int) -> "BraidWord":
        return BraidWord(self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def validate(self, system: CoxeterSystem) -> "BraidWord":
        if self.max_index() > system.rank:
            raise BraidSyntaxError(
                f"Generator index out of range for {system.label}",
                {"rank": system.rank, "letters": list(self.letters)},
            )
        return self

    def image_in_w(self, system: CoxeterSystem) -> Elem:
        return system.from_word(self.letters)

    def relabel(self, gen_map) -> "BraidWord":
        """Apply a generator map, keeping signs"""
        return BraidWord(tuple(gen_map[abs(x)] * (1 if x > 0 else -1) for x in self.letters))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


def lift_sigma(system: CoxeterSystem, w: Elem) -> BraidWord:
    return BraidWord(system.reduced_word(w))


def full_twist(system: CoxeterSystem) -> BraidWord:
    half = lift_sigma(system, system.w0)
    return half + half


def torus_braid(system: CoxeterSystem, m: int) -> BraidWord:
    """(sigma_1 ... sigma_(n-1))^m in Br_n"""
    if not system.is_type_a:
        raise UnsupportedTypeError("Torus braids are defined for type A only", {"type": system.label})
    if m < 0:
        raise ValidationError("Torus braid exponent must be nonnegative")
    return BraidWord(tuple(system.generators)) * m


def _normalize_pair(system: CoxeterSystem, a: Elem, b: Elem) -> Tuple[Elem, Elem, bool]:
    changed = False
    while True:
        moved = False
        for s in system.left_descents(b):
            if not system.descent_right(a, s):
                a = system.right_mul_gen(a, s)
                b = system.left_mul_gen(s, b)
                moved = changed = True
                break
        if not moved:
            return a, b, changed


def simple_normal_form(system: CoxeterSystem, simples: Sequence[Elem]) -> Tuple[Elem, ...]:
    """Left-greedy normal form of the product of the lifts of simples"""
    factors: List[Elem] = list(simples)
    dirty = True
    while dirty:
        dirty = False
        for k in range(len(factors) - 1):
            a, b, changed = _normalize_pair(system, factors[k], factors[k + 1])
            if changed:
                factors[k], factors[k + 1] = a, b
                dirty = True
    while factors and factors[-1] == system.identity:
        factors.pop()
    return tuple(factors)


def positive_normal_form(system: CoxeterSystem, word: BraidWord) -> Tuple[Elem, ...]:
    """Left-greedy factorization into simple elements, trailing identities removed"""
    if not word.is_positive():
        raise ValidationError("Normal form needs a positive braid word", {"letters": list(word.letters)})
    word.validate(system)
    return simple_normal_form(system, [system.gen(i) for i in word.letters])


def is_periodic_witness(system: CoxeterSystem, word: BraidWord, n: int, m: int) -> bool:
    """True iff word^n = pi^m in the positive braid monoid"""
    if n < 1 or m < 0:
        raise ValidationError("Periodic witness needs n >= 1 and m >= 0", {"n": n, "m": m})
    if not word.is_positive():
        raise ValidationError("Periodic witness needs a positive braid word")
    if word.writhe * n != 2 * system.N * m:
        return False
    return positive_normal_form(system, word * n) == positive_normal_form(system, full_twist(system) * m)


def words_equal_positive(system: CoxeterSystem, u: Sequence[int], v: Sequence[int]) -> bool:
    return positive_normal_form(system, BraidWord(tuple(u))) == positive_normal_form(system, BraidWord(tuple(v)))
