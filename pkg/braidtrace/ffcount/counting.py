"""
Point counts of the Bott-Samelson family O(beta) and its fibers.

A chain B_0 -s_1- B_1 -s_2- ... -s_l- B_l is counted through the product
M(beta) of the adjacency matrices of the relations O_s: M[i, j] is the
number of chains from flag i to flag j. The fiber over g counts chains with
B_l = g B_0, so everything reduces to sums of M along permutations.
"""
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Optional, Sequence

import numpy as np
from sympy import Matrix, isprime

from braidtrace.core.config import settings
from braidtrace.core.exceptions import SizeGuardError, ValidationError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord
from braidtrace.ffcount.flags import (
    borel_order,
    flag_variety,
    group_dimension,
    group_system,
    inverse_mod,
    unipotent_elements,
)
from braidtrace.reptheory.labels import label_key
from braidtrace.schemas.results import CountReport

FIBERS = ("all", "one", "g", "unipotent", "steinberg")


def check_count_limits(group: str, q: int, word: BraidWord) -> None:
    rank = group_dimension(group) - 1
    word.validate(group_system(group))
    if not word.is_positive():
        raise ValidationError("Point counts need a positive braid", {"braid": list(word.letters)})
    if not isprime(q):
        raise ValidationError(f"q = {q} is not prime", {"q": q})
    if q > settings.FF_MAX_Q:
        raise SizeGuardError(f"q = {q} exceeds the limit {settings.FF_MAX_Q}", {"q": q})
    limit = settings.FF_MAX_WRITHE_RANK1 if rank == 1 else settings.FF_MAX_WRITHE_RANK2
    if word.writhe > limit:
        logger.warning(f"Refusing a writhe {word.writhe} count for {group}")
        raise SizeGuardError(f"Writhe {word.writhe} exceeds the limit {limit} for {group}",
                             {"writhe": word.writhe, "limit": limit})


@lru_cache(maxsize=256)
def chain_matrix(group: str, q: int, letters: tuple) -> np.ndarray:
    """M(beta) for a positive word"""
    variety = flag_variety(group, q)
    out = np.eye(variety.size, dtype=np.int64)
    for s in letters:
        out = out @ variety.adjacency(s)
    return out


def _fiber_sum(matrix: np.ndarray, moved: np.ndarray) -> int:
    return int(matrix[np.arange(len(moved)), moved].sum())


def count_over(group: str, q: int, word: BraidWord, g: Sequence[Sequence[int]]) -> int:
    """|O(beta)_g|: chains with B_l = g B_0"""
    check_count_limits(group, q, word)
    g = np.array(g, dtype=np.int64) % q
    variety = flag_variety(group, q)
    if g.shape != (variety.rank + 1,) * 2:
        raise ValidationError("Matrix size does not match the group", {"group": group})
    det = int(Matrix(g.tolist()).det()) % q
    if det == 0 or (group.startswith("SL") and det != 1):
        raise ValidationError(f"Matrix is not in {group}(F_{q})", {"det": det})
    matrix = chain_matrix(group, q, word.letters)
    return _fiber_sum(matrix, variety.act(g, inverse_mod(g, q)))


def unipotent_counts(group: str, q: int, word: BraidWord) -> Dict[tuple, int]:
    """Per Jordan type, the sum over u of |U(beta)_u|"""
    check_count_limits(group, q, word)
    variety = flag_variety(group, q)
    matrix = chain_matrix(group, q, word.letters)
    out: Dict[tuple, int] = defaultdict(int)
    for u, u_inv, jordan in unipotent_elements(group, q):
        out[jordan] += _fiber_sum(matrix, variety.act(u, u_inv))
    return dict(out)


def steinberg_counts(group: str, q: int, word: BraidWord) -> Dict[tuple, int]:
    """|Z(beta)|: unipotent fibers weighted by the number of Borels containing u"""
    check_count_limits(group, q, word)
    variety = flag_variety(group, q)
    matrix = chain_matrix(group, q, word.letters)
    out: Dict[tuple, int] = defaultdict(int)
    for u, u_inv, jordan in unipotent_elements(group, q):
        moved = variety.act(u, u_inv)
        fixed = int((moved == np.arange(variety.size)).sum())
        out[jordan] += fixed * _fiber_sum(matrix, moved)
    return dict(out)


def count_chains(group: str, q: int, word: BraidWord, fiber: str = "one",
                 g: Optional[Sequence[Sequence[int]]] = None) -> CountReport:
    if fiber not in FIBERS:
        raise ValidationError(f"Unknown fiber {fiber!r}", {"fibers": list(FIBERS)})
    check_count_limits(group, q, word)
    logger.debug(f"Counting {fiber} fiber of {group}({q}) for [{word}]")
    if fiber == "one":
        counts = {"1": int(np.trace(chain_matrix(group, q, word.letters)))}
    elif fiber == "all":
        total = int(chain_matrix(group, q, word.letters).sum())
        counts = {"all": borel_order(group, q) * total}
    elif fiber == "g":
        if g is None:
            raise ValidationError("The g fiber needs a matrix")
        counts = {"g": count_over(group, q, word, g)}
    else:
        per_class = unipotent_counts(group, q, word) if fiber == "unipotent" \
            else steinberg_counts(group, q, word)
        counts = {label_key(mu): value for mu, value in sorted(per_class.items())}
    return CountReport(group=group, q=q, braid=list(word.letters), fiber=fiber, counts=counts)
