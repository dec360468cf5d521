"""
Irreducible characters of W and their names.

Type A(n) irreducibles are partitions of n+1, listed in decreasing
lexicographic order so the trivial character (n+1) comes first and the sign
character (1,...,1) last. Dihedral irreducibles are the strings
"1", "delta", "phi_1", ..., "epsdelta", "eps"; delta and epsdelta exist for
even m only.
"""
from functools import lru_cache
from math import factorial
from typing import List, Sequence, Tuple, Union

from braidtrace.core.exceptions import ValidationError
from braidtrace.coxeter.systems import CoxeterSystem, partitions

Label = Union[Tuple[int, ...], str]

TRIVIAL = "1"
SIGN = "eps"
DELTA_LABEL = "delta"
EPS_DELTA_LABEL = "epsdelta"

_TEXT_ALIASES = {
    "ε": SIGN, "δ": DELTA_LABEL, "εδ": EPS_DELTA_LABEL, "φ": "phi_1",
}


def conjugate_partition(mu: Sequence[int]) -> Tuple[int, ...]:
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part > i) for i in range(mu[0]))


def hook_dimension(mu: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape mu"""
    n = sum(mu)
    conj = conjugate_partition(mu)
    hooks = 1
    for i, row in enumerate(mu):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def _irreducibles(system: CoxeterSystem) -> Tuple[Label, ...]:
    if system.is_type_a:
        return tuple(partitions(system.param + 1))
    m = system.m
    phis = tuple(f"phi_{j}" for j in range(1, (m + 1) // 2))
    if m % 2:
        return (TRIVIAL,) + phis + (SIGN,)
    return (TRIVIAL, DELTA_LABEL) + phis + (EPS_DELTA_LABEL, SIGN)


def irreducibles(system: CoxeterSystem) -> List[Label]:
    return list(_irreducibles(system))


def trivial_label(system: CoxeterSystem) -> Label:
    return (system.param + 1,) if system.is_type_a else TRIVIAL


def sign_label(system: CoxeterSystem) -> Label:
    return (1,) * (system.param + 1) if system.is_type_a else SIGN


def phi_index(label: str) -> int:
    return int(label.split("_", 1)[1])


def dimension(system: CoxeterSystem, label: Label) -> int:
    if system.is_type_a:
        return hook_dimension(label)
    return 2 if str(label).startswith("phi_") else 1


def eps_twist(system: CoxeterSystem, label: Label) -> Label:
    """The label of eps tensor label"""
    if system.is_type_a:
        return conjugate_partition(label)
    swap = {TRIVIAL: SIGN, SIGN: TRIVIAL, DELTA_LABEL: EPS_DELTA_LABEL, EPS_DELTA_LABEL: DELTA_LABEL}
    return swap.get(label, label)


def label_key(label: Label) -> str:
    """JSON key: "[2,1]" for partitions, the bare name for dihedral labels"""
    if isinstance(label, tuple):
        return "[" + ",".join(str(p) for p in label) + "]"
    return label


def label_text(label: Label) -> str:
    """Text form: always bracketed, e.g. [2,1] or [eps]"""
    if isinstance(label, tuple):
        return label_key(label)
    return f"[{label}]"


def parse_label(system: CoxeterSystem, text: str) -> Label:
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    s = _TEXT_ALIASES.get(s, s)
    if system.is_type_a:
        try:
            label = tuple(int(p) for p in s.replace(" ", "").split(",") if p)
        except ValueError:
            raise ValidationError(f"Not a partition label: {text!r}")
    else:
        label = s
    if label not in _irreducibles(system):
        raise ValidationError(
            f"{text!r} is not an irreducible character of {system.label}",
            {"labels": [label_key(x) for x in _irreducibles(system)]},
        )
    return label


def hook_label(system: CoxeterSystem, k: int) -> Tuple[int, ...]:
    """Alt^k of the reflection representation of A(n) is the hook (n+1-k, 1^k)"""
    n = system.param
    if not 0 <= k <= n:
        raise ValidationError(f"Exterior degree {k} out of range for {system.label}")
    return (n + 1 - k,) + (1,) * k
