"""
Flag varieties of SL/GL_2 and SL/GL_3 over F_q, their Bruhat adjacency
matrices, and the unipotent elements acting on them.

Rank 1: a Borel is a point of P^1. Rank 2: a full flag is (v, n) with v a
line and n the normal vector of a plane containing it (n . v = 0); g acts by
v -> g v and n -> g^-T n.
"""
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from sympy import Matrix

from braidtrace.core.config import settings
from braidtrace.core.exceptions import SizeGuardError, ValidationError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import CoxeterSystem, type_a

GROUPS = ("SL2", "GL2", "SL3", "GL3")


def group_dimension(group: str) -> int:
    if group not in GROUPS:
        raise ValidationError(f"Unsupported group {group!r}", {"groups": list(GROUPS)})
    return int(group[-1])


def group_system(group: str) -> CoxeterSystem:
    return type_a(group_dimension(group) - 1)


def group_order(group: str, q: int) -> int:
    n = group_dimension(group)
    order = q ** (n * (n - 1) // 2)
    for k in range(1, n + 1):
        order *= q ** k - 1
    return order // (q - 1) if group.startswith("SL") else order


def borel_order(group: str, q: int) -> int:
    n = group_dimension(group)
    torus = (q - 1) ** (n - 1 if group.startswith("SL") else n)
    return torus * q ** (n * (n - 1) // 2)


def projective_points(n: int, q: int) -> np.ndarray:
    """Normalized representatives (first nonzero coordinate 1) of P^(n-1)(F_q)"""
    points = []
    for v in itertools.product(range(q), repeat=n):
        nonzero = [x for x in v if x]
        if nonzero and nonzero[0] == 1:
            points.append(v)
    return np.array(sorted(points), dtype=np.int64)


def normalize_rows(rows: np.ndarray, q: int) -> np.ndarray:
    """Scale each nonzero row so its first nonzero entry is 1"""
    inverses = np.array([0] + [pow(x, -1, q) for x in range(1, q)], dtype=np.int64)
    lead = rows[np.arange(len(rows)), np.argmax(rows != 0, axis=1)]
    return (rows * inverses[lead][:, None]) % q


@dataclass
class FlagVariety:
    """All Borels of one group over F_q, indexed 0..size-1"""

    group: str
    q: int
    lines: np.ndarray = field(init=False)
    normals: np.ndarray = field(init=False)

    def __post_init__(self):
        n = group_dimension(self.group)
        points = projective_points(n, self.q)
        self._powers = self.q ** np.arange(n, dtype=np.int64)[::-1]
        self._code = {int(c): i for i, c in enumerate(points @ self._powers)}
        if n == 2:
            self.lines = points
            self.normals = np.zeros_like(points)
            self._index = {(i, 0): i for i in range(len(points))}
        else:
            pairs = [
                (i, j) for i, v in enumerate(points) for j, m in enumerate(points)
                if int(v @ m) % self.q == 0
            ]
            self.lines = points[[i for i, _ in pairs]]
            self.normals = points[[j for _, j in pairs]]
            self._index = {pair: k for k, pair in enumerate(pairs)}
        self._pairs = [self._point_pair(k) for k in range(len(self.lines))]
        logger.debug(f"Flag variety of {self.group} over F_{self.q}: {self.size} Borels")

    @property
    def rank(self) -> int:
        return group_dimension(self.group) - 1

    @property
    def size(self) -> int:
        return len(self.lines)

    def _point_index(self, rows: np.ndarray) -> np.ndarray:
        codes = rows @ self._powers
        return np.array([self._code[int(c)] for c in codes], dtype=np.int64)

    def _point_pair(self, k: int) -> Tuple[int, int]:
        line = self._code[int(self.lines[k] @ self._powers)]
        if self.rank == 1:
            return line, 0
        return line, self._code[int(self.normals[k] @ self._powers)]

    def adjacency(self, s: int) -> np.ndarray:
        """0/1 matrix of the relation O_s: the flags differ exactly in step s"""
        lines = np.array([p[0] for p in self._pairs])
        planes = np.array([p[1] for p in self._pairs])
        same_line = lines[:, None] == lines[None, :]
        same_plane = planes[:, None] == planes[None, :]
        if self.rank == 1:
            rel = ~same_line
        elif s == 1:
            rel = same_plane & ~same_line
        else:
            rel = same_line & ~same_plane
        return rel.astype(np.int64)

    def act(self, g: np.ndarray, g_inv: np.ndarray) -> np.ndarray:
        """Index of g.F for every flag F"""
        moved_lines = self._point_index(normalize_rows((self.lines @ g.T) % self.q, self.q))
        if self.rank == 1:
            return moved_lines
        moved_normals = self._point_index(normalize_rows((self.normals @ g_inv) % self.q, self.q))
        return np.array([self._index[(a, b)] for a, b in zip(moved_lines, moved_normals)], dtype=np.int64)


@lru_cache(maxsize=None)
def flag_variety(group: str, q: int) -> FlagVariety:
    return FlagVariety(group, q)


def _adapted_basis(variety: FlagVariety, k: int) -> np.ndarray:
    """Columns e1 on the line, e2 completing the plane, e3 completing F_q^n"""
    q, n = variety.q, variety.rank + 1
    v = variety.lines[k]
    candidates = [np.array(c, dtype=np.int64) for c in itertools.product(range(q), repeat=n)]
    if n == 2:
        rest = [c for c in candidates if (v[0] * c[1] - v[1] * c[0]) % q]
        return np.stack([v, rest[0]], axis=1)
    nrm = variety.normals[k]
    in_plane = [c for c in candidates if int(c @ nrm) % q == 0 and np.any(np.cross(v, c) % q)]
    e2 = in_plane[0]
    e3 = next(c for c in candidates if int(c @ nrm) % q)
    return np.stack([v, e2, e3], axis=1)


def inverse_mod(m: np.ndarray, q: int) -> np.ndarray:
    return np.array(Matrix(m.tolist()).inv_mod(q).tolist(), dtype=np.int64)


def _unipotent_inverse(u: np.ndarray, q: int) -> np.ndarray:
    """(1 + N)^-1 = 1 - N + N^2 for N^3 = 0"""
    ident = np.eye(len(u), dtype=np.int64)
    nil = (u - ident) % q
    return (ident - nil + nil @ nil) % q


def jordan_type(u: np.ndarray, q: int) -> Tuple[int, ...]:
    """Jordan type of a unipotent matrix, from N = u - 1 and N^2"""
    n = len(u)
    nil = (u - np.eye(n, dtype=np.int64)) % q
    if not nil.any():
        return (1,) * n
    if n == 2 or not ((nil @ nil) % q).any():
        return (2,) + (1,) * (n - 2)
    return (3,)


@lru_cache(maxsize=None)
def unipotent_elements(group: str, q: int) -> Tuple[Tuple[np.ndarray, np.ndarray, Tuple[int, ...]], ...]:
    """Every unipotent u with its inverse and Jordan type, each listed once"""
    variety = flag_variety(group, q)
    n = variety.rank + 1
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if variety.size * q ** len(upper) > settings.FF_MAX_ENUMERATION:
        logger.warning(f"Refusing to enumerate unipotents of {group}({q})")
        raise SizeGuardError("Unipotent enumeration exceeds the configured limit",
                             {"group": group, "q": q, "limit": settings.FF_MAX_ENUMERATION})
    seen: Dict[bytes, Tuple[np.ndarray, np.ndarray, Tuple[int, ...]]] = {}
    for k in range(variety.size):
        # radical of the Borel fixing flag k, conjugated from the upper unitriangular group
        p = _adapted_basis(variety, k)
        p_inv = inverse_mod(p, q)
        for values in itertools.product(range(q), repeat=len(upper)):
            std = np.eye(n, dtype=np.int64)
            for (i, j), x in zip(upper, values):
                std[i, j] = x
            u = (p @ std @ p_inv) % q
            key = u.tobytes()
            if key not in seen:
                u_inv = _unipotent_inverse(u, q)
                seen[key] = (u, u_inv, jordan_type(u, q))
    logger.debug(f"{group}({q}) has {len(seen)} unipotent elements")
    return tuple(seen.values())


def jordan_classes(n: int) -> List[Tuple[int, ...]]:
    return [(n,)] + ([(2, 1)] if n == 3 else []) + [(1,) * n]
