"""
The affine chart X_0(beta, B) of a GL_2 braid variety.

Each letter contributes the matrix f(z) = [[z, -1], [1, 0]]; X_0 is the set
of z in F_q^l whose product is upper triangular, i.e. sends e_1 to a
multiple of e_1.
"""
import itertools

import numpy as np
from sympy import isprime

from braidtrace.core.config import settings
from braidtrace.core.exceptions import SizeGuardError, ValidationError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord
from braidtrace.ffcount.counting import count_chains
from braidtrace.ffcount.flags import borel_order, group_order


def _check(q: int, word: BraidWord) -> None:
    if not isprime(q):
        raise ValidationError(f"q = {q} is not prime", {"q": q})
    if word.max_index() > 1 or not word.is_positive():
        raise ValidationError("X_0 is defined for positive words in Br_2", {"braid": list(word.letters)})
    if q > settings.X0_MAX_Q or word.writhe > settings.X0_MAX_WRITHE:
        logger.warning(f"Refusing X_0 count at q = {q}, writhe {word.writhe}")
        raise SizeGuardError("X_0 count exceeds the configured limits",
                             {"q": q, "writhe": word.writhe,
                              "max_q": settings.X0_MAX_Q, "max_writhe": settings.X0_MAX_WRITHE})


def count_x0(q: int, word: BraidWord) -> int:
    """|X_0(beta)(F_q)| by pushing the count of every image of e_1 through the letters"""
    _check(q, word)
    states = np.zeros((q, q), dtype=np.int64)
    states[1, 0] = 1
    x, y, z = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    for _ in word.letters:
        step = np.zeros_like(states)
        np.add.at(step, ((z * x - y) % q, x), np.broadcast_to(states[:, :, None], x.shape))
        states = step
    return int(states[:, 0].sum())


def count_x0_brute(q: int, word: BraidWord) -> int:
    """Direct enumeration of z in F_q^l; small sizes only"""
    _check(q, word)
    count = 0
    for zs in itertools.product(range(q), repeat=len(word)):
        x, y = 1, 0
        for z in zs:
            x, y = (z * x - y) % q, x
        count += y == 0
    return count


def fiber_proposition(q: int, word: BraidWord) -> bool:
    """|X(beta)| = |X_0(beta)| |G| / |B| for GL_2"""
    x = count_chains("GL2", q, word, fiber="one").counts["1"]
    x0 = count_x0(q, word)
    ratio = group_order("GL2", q) // borel_order("GL2", q)
    if x != x0 * ratio:
        logger.error(f"Fiber identity fails at q = {q} for [{word}]: {x} != {x0} * {ratio}")
        return False
    return True
