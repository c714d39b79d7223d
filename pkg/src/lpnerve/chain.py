"""Integer chain groups of the filtered nerve, with grade localization.

Chains are normalized from the start: generators are the nondegenerate
tuples, and a degenerate face contributes nothing to a boundary.  A sieve
selects which births survive at each grade; the strict-predecessor sieve
keeps only generators born exactly at the grade under inspection, which is
the magnitude-style localization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .values import EPS, InputError, close
from .nerve import FilteredComplex, SimplexTuple, is_degenerate

EMPTY = "empty"
STRICT_PREDECESSORS = "strict"
CUSTOM_GRID = "custom"


@dataclass(frozen=True)
class SieveSpec:
    """Which birth grades are quotiented away at each grade.

    kind "empty": nothing is killed (global chains).
    kind "strict": every birth strictly below the grade is killed.
    kind "custom": an explicit down-closed, grade-monotone assignment on
    the critical grid, given as {grade: frozenset of killed grades}.
    """

    kind: str = EMPTY
    grid: Optional[Dict[float, frozenset]] = None

    def __post_init__(self):
        if self.kind not in (EMPTY, STRICT_PREDECESSORS, CUSTOM_GRID):
            raise InputError(f"unknown sieve kind {self.kind!r}")
        if self.kind == CUSTOM_GRID:
            if self.grid is None:
                raise InputError("custom sieve requires a grid assignment")
            self._check_grid()

    def _check_grid(self):
        grades = sorted(self.grid)
        for r, killed in self.grid.items():
            for s in killed:
                if s >= r - EPS:
                    raise InputError(
                        f"sieve at grade {r} may only contain grades below it")
            # down-closed on the grid: anything below a killed grade is killed
            for t in grades:
                if t not in killed and any(t < s - EPS for s in killed):
                    raise InputError(
                        f"sieve at grade {r} is not down-closed (misses {t})")
        for lo, hi in zip(grades, grades[1:]):
            if not self.grid[lo] <= self.grid[hi]:
                raise InputError("sieve assignment must be monotone in the grade")

    def kills(self, birth: float, grade: float, eps: float = EPS) -> bool:
        if self.kind == EMPTY:
            return False
        if self.kind == STRICT_PREDECESSORS:
            return birth < grade - eps
        killed = self._lookup(grade)
        return any(close(birth, s, eps) for s in killed)

    def _lookup(self, grade: float) -> frozenset:
        for r, killed in self.grid.items():
            if close(r, grade):
                return killed
        raise InputError(f"grade {grade} is not on the sieve grid")


@dataclass
class IntMatrix:
    """Dense integer matrix with simplex-tuple labels on both axes."""

    entries: List[List[int]]  # rows x cols
    row_labels: List[SimplexTuple]
    col_labels: List[SimplexTuple]

    @property
    def rows(self) -> int:
        return len(self.row_labels)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    def to_triplets(self) -> dict:
        """Sparse triplet form for debugging dumps."""
        triplets = [
            [i, j, v]
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
            if v != 0
        ]
        return {"rows": self.rows, "cols": self.cols, "entries": triplets}


def generators_at(fc: FilteredComplex, degree: int, grade: float,
                  sieve: SieveSpec, eps: float = EPS) -> List[SimplexTuple]:
    """Surviving tuples of the given degree at the given grade."""
    if degree > fc.max_dim:
        raise InputError(
            f"degree {degree} exceeds the enumerated max_dim {fc.max_dim}")
    if degree < 0:
        return []
    out = []
    for t in fc.degree(degree):
        if t.birth > grade + eps:
            break  # tuples are sorted by birth
        if not sieve.kills(t.birth, grade, eps):
            out.append(t)
    return out


def boundary_matrix(fc: FilteredComplex, degree: int, grade: float,
                    sieve: SieveSpec, eps: float = EPS) -> IntMatrix:
    """Alternating-face boundary from degree to degree-1 survivors.

    Faces that are degenerate or killed by the sieve contribute zero.
    """
    if degree < 1:
        raise InputError("boundary_matrix requires degree >= 1")
    cols = generators_at(fc, degree, grade, sieve, eps)
    rows = generators_at(fc, degree - 1, grade, sieve, eps)
    row_index = {t.verts: i for i, t in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, t in enumerate(cols):
        for i in range(degree + 1):
            face = t.verts[:i] + t.verts[i + 1:]
            if is_degenerate(face):
                continue
            k = row_index.get(face)
            if k is not None:
                entries[k][j] += -1 if i % 2 else 1
    return IntMatrix(entries, rows, cols)
