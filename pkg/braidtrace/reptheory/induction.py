"""
Induction from standard parabolic subgroups by class fusion.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from braidtrace.core.exceptions import IntegralityError, SystemMismatchError
from braidtrace.coxeter.systems import ClassKey, CoxeterSystem
from braidtrace.exactmath.cyclo import sum_cyclo
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.labels import Label
from braidtrace.reptheory.virtual import VirtualCharacter


def _default_generators(sub: CoxeterSystem, system: CoxeterSystem) -> Tuple[int, ...]:
    return tuple(range(1, sub.rank + 1))


@lru_cache(maxsize=None)
def class_fusion(system: CoxeterSystem, J: Tuple[int, ...]) -> Dict[ClassKey, ClassKey]:
    """Class of W containing each class of the parabolic W_J"""
    sub, gen_map = system.parabolic(J)
    return {
        d: system.class_of(system.embed(sub, gen_map, sub.class_representative(d)))
        for d in sub.classes()
    }


@lru_cache(maxsize=None)
def induce_irreducible(system: CoxeterSystem, J: Tuple[int, ...], label: Label) -> Dict[Label, int]:
    """Ind from W_J to W of one irreducible, as integer multiplicities"""
    sub, _ = system.parabolic(J)
    sub_table, table = character_table(sub), character_table(system)
    fusion = class_fusion(system, J)
    values = {}
    for c in system.classes():
        parts = [sub_table.class_sizes[d] * sub_table.value(label, d) for d in sub.classes() if fusion[d] == c]
        # Ind chi(g) = |C_W(g)| / |W_J| * sum over W_J-classes D inside C of |D| chi(D)
        centralizer = Fraction(system.order, table.class_sizes[c])
        values[c] = sum_cyclo(parts) * centralizer / sub.order
    out = {}
    for chi, m in table.decompose(values).items():
        if not isinstance(m, Fraction) or m.denominator != 1:
            raise IntegralityError("Induced character has a non-integral multiplicity",
                                   {"label": str(label), "target": str(chi)})
        out[chi] = int(m)
    return out


def induce(sub: CoxeterSystem, system: CoxeterSystem, chi: VirtualCharacter,
           J: Optional[Sequence[int]] = None) -> VirtualCharacter:
    """Ind_{W'}^{W} chi for W' = W_J; J defaults to the first rank(W') generators"""
    if chi.system != sub:
        raise SystemMismatchError("Character lives on another group", {"expected": sub.label, "found": chi.system.label})
    J = tuple(sorted(J)) if J is not None else _default_generators(sub, system)
    parabolic, _ = system.parabolic(J)
    if parabolic != sub:
        raise SystemMismatchError(
            f"{sub.label} is not the parabolic subgroup of {system.label} on generators {list(J)}",
            {"parabolic": parabolic.label},
        )
    total = VirtualCharacter(system)
    for label, c in chi.items():
        total = total + VirtualCharacter(system, induce_irreducible(system, J, label)).scale(c)
    return total
