"""Homology of the filtered nerve: graded tables and persistence barcodes.

Integer homology goes through an exact Smith normal form (Python integers,
so no overflow); field homology through Gaussian elimination mod q.  The
barcode pipeline orders all tuples by (birth, degree, vertices) and runs
the standard column reduction (compiled kernel when available).  A
classical Vietoris-Rips computation on unordered simplices, with its own
self-contained mod-2 reduction, serves as an independent cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernels
from .chain import (EMPTY, STRICT_PREDECESSORS, IntMatrix, SieveSpec,
                    boundary_matrix, generators_at)
from .nerve import FilteredComplex, SimplexTuple, enumerate_complex, is_degenerate
from .values import EPS, INF, InputError, close
from .vgraph import VGraph, is_enriched_category


@dataclass(frozen=True)
class Coefficients:
    """Integer coefficients (modulus None) or a prime field GF(q)."""

    modulus: Optional[int] = None

    def __post_init__(self):
        q = self.modulus
        if q is not None:
            if q < 2 or any(q % k == 0 for k in range(2, int(q ** 0.5) + 1)):
                raise InputError(f"field order must be prime, got {q}")


INTEGERS = Coefficients(None)
GF2 = Coefficients(2)


@dataclass(frozen=True)
class HomologySummary:
    grade: float
    degree: int
    rank: int
    torsion: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Bar:
    degree: int
    birth: float
    death: float  # inf for essential classes


@dataclass
class Barcode:
    bars: List[Bar] = field(default_factory=list)

    def in_degree(self, d: int) -> List[Bar]:
        return [b for b in self.bars if b.degree == d]

    def sort(self) -> "Barcode":
        self.bars.sort(key=lambda b: (b.degree, b.birth, b.death))
        return self


# -- Smith normal form ------------------------------------------------


def smith_normal_form(M: IntMatrix | Sequence[Sequence[int]]) -> Tuple[int, List[int]]:
    """Rank and elementary divisors of an integer matrix (exact)."""
    entries = M.entries if isinstance(M, IntMatrix) else M
    a = [list(map(int, row)) for row in entries]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    divisors: List[int] = []
    t = 0
    while t < nrows and t < ncols:
        # pick the nonzero pivot of smallest magnitude
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            dirty = False
            for i in range(nrows):
                if i != t and a[i][t]:
                    qt = a[i][t] // a[t][t]
                    for j in range(ncols):
                        a[i][j] -= qt * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(ncols):
                if j != t and a[t][j]:
                    qt = a[t][j] // a[t][t]
                    for i in range(nrows):
                        a[i][j] -= qt * a[i][t]
                    if a[t][j]:
                        for i in range(nrows):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        dirty = True
            if not dirty and all(a[t][j] == 0 for j in range(ncols) if j != t) \
                    and all(a[i][t] == 0 for i in range(nrows) if i != t):
                break
        divisors.append(abs(a[t][t]))
        t += 1
    # divisibility fixup: d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(len(divisors) - 1):
            x, y = divisors[i], divisors[i + 1]
            if y % x != 0:
                g = math.gcd(x, y)
                divisors[i], divisors[i + 1] = g, x * y // g
                changed = True
    return len(divisors), divisors


def _field_rank(entries: Sequence[Sequence[int]], q: int) -> int:
    a = [[v % q for v in row] for row in entries]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = pow(a[row][col], q - 2, q)
        a[row] = [(v * inv) % q for v in a[row]]
        for i in range(nrows):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [(v - f * w) % q for v, w in zip(a[i], a[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


# -- graded homology --------------------------------------------------


def homology_at(fc: FilteredComplex, degree: int, grade: float,
                sieve: SieveSpec, coefficients: Coefficients = INTEGERS,
                eps: float = EPS) -> HomologySummary:
    """Homology rank (and torsion, over the integers) at one grade."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    if degree + 1 > fc.max_dim:
        raise InputError(
            f"homology in degree {degree} needs max_dim >= {degree + 1}, "
            f"but the complex was enumerated with max_dim {fc.max_dim}")
    gens = generators_at(fc, degree, grade, sieve, eps)
    if degree == 0:
        rank_lower = 0
    else:
        lower = boundary_matrix(fc, degree, grade, sieve, eps)
        if coefficients.modulus is None:
            rank_lower, _ = smith_normal_form(lower)
        else:
            rank_lower = _field_rank(lower.entries, coefficients.modulus)
    upper = boundary_matrix(fc, degree + 1, grade, sieve, eps)
    if coefficients.modulus is None:
        rank_upper, divisors = smith_normal_form(upper)
        torsion = tuple(d for d in divisors if d > 1)
    else:
        rank_upper = _field_rank(upper.entries, coefficients.modulus)
        torsion = ()
    nullity = len(gens) - rank_lower
    return HomologySummary(grade, degree, nullity - rank_upper, torsion)


def magnitude_homology(X: VGraph, p: float, degrees: Iterable[int],
                       max_dim: Optional[int] = None,
                       budget: Optional[int] = None,
                       workers: int = 1) -> List[HomologySummary]:
    """Localized homology table over the critical grades.

    p = 1 on a space satisfying the additive triangle inequality gives the
    classical magnitude homology; other p give its +_p variants.
    """
    degrees = sorted(set(degrees))
    if max_dim is None:
        max_dim = max(degrees) + 1
    if max_dim < max(degrees) + 1:
        raise InputError(
            f"max_dim must be at least {max(degrees) + 1} for degree "
            f"{max(degrees)}")
    kwargs = {} if budget is None else {"budget": budget}
    fc = enumerate_complex(X, p, max_dim, workers=workers, **kwargs)
    sieve = SieveSpec(STRICT_PREDECESSORS)
    out: List[HomologySummary] = []
    for r in fc.grades:
        for n in degrees:
            if not generators_at(fc, n, r, sieve):
                continue
            out.append(homology_at(fc, n, r, sieve, INTEGERS))
    return out


# -- persistence ------------------------------------------------------


def _barcode_from_reduction(order: List[Tuple[float, int]], lows: List[int],
                            max_degree: int, eps: float) -> Barcode:
    """Pair pivots into bars.  ``order[j]`` is (birth, degree) of simplex j."""
    bars: List[Bar] = []
    killed = [False] * len(order)
    for j, low in enumerate(lows):
        if low >= 0:
            killed[j] = True
            killed[low] = True
            birth, deg = order[low]
            death = order[j][0]
            if deg <= max_degree and death > birth + eps:
                bars.append(Bar(deg, birth, death))
    for j, (birth, deg) in enumerate(order):
        if not killed[j] and lows[j] < 0 and deg <= max_degree:
            bars.append(Bar(deg, birth, INF))
    return Barcode(bars).sort()


def persistence_barcode(fc: FilteredComplex, max_degree: int,
                        field_coeffs: Coefficients = GF2,
                        eps: float = EPS) -> Barcode:
    """Barcode of the global (unlocalized) complex over a prime field."""
    if field_coeffs.modulus is None:
        raise InputError("persistence requires field coefficients")
    if max_degree + 1 > fc.max_dim:
        raise InputError(
            f"barcodes up to degree {max_degree} need max_dim >= "
            f"{max_degree + 1}, got {fc.max_dim}")
    q = field_coeffs.modulus
    simplices: List[SimplexTuple] = [
        t for level in fc.tuples for t in level
    ]
    simplices.sort(key=lambda t: (t.birth, t.degree, t.verts))
    index = {t.verts: i for i, t in enumerate(simplices)}
    col_rows: List[List[int]] = []
    col_coeffs: List[List[int]] = []
    for t in simplices:
        entries: Dict[int, int] = {}
        if t.degree > 0:
            for i in range(t.degree + 1):
                face = t.verts[:i] + t.verts[i + 1:]
                if is_degenerate(face):
                    continue
                k = index[face]
                entries[k] = (entries.get(k, 0) + (-1 if i % 2 else 1)) % q
        items = sorted((k, c) for k, c in entries.items() if c)
        col_rows.append([k for k, _ in items])
        col_coeffs.append([c for _, c in items])
    lows = kernels.reduce_columns(col_rows, col_coeffs, q)
    order = [(t.birth, t.degree) for t in simplices]
    return _barcode_from_reduction(order, lows, max_degree, eps)


# -- classical Vietoris-Rips oracle -----------------------------------


def vr_oracle(X: VGraph, max_degree: int,
              field_coeffs: Coefficients = GF2, eps: float = EPS) -> Barcode:
    """Persistence of the classical Vietoris-Rips complex.

    Works on unordered vertex subsets with a self-contained mod-2
    reduction, fully independent of the tuple-nerve pipeline.
    """
    if field_coeffs.modulus not in (None, 2):
        raise InputError("the classical oracle is implemented over GF(2)")
    if not X.is_symmetric(eps) or not X.is_strict(eps):
        raise InputError("the classical oracle needs a symmetric strict space")
    if not is_enriched_category(X, 1.0, eps):
        raise InputError("the classical oracle needs the triangle inequality")
    n = len(X)
    verts = list(range(n))
    simplices: List[Tuple[float, Tuple[int, ...]]] = []
    for size in range(1, max_degree + 3):
        for combo in itertools.combinations(verts, size):
            diam = 0.0
            ok = True
            for a, b in itertools.combinations(combo, 2):
                d = X.dist[a, b]
                if math.isinf(d):
                    ok = False
                    break
                diam = max(diam, d)
            if ok:
                simplices.append((diam, combo))
    simplices.sort(key=lambda s: (s[0], len(s[1]), s[1]))
    index = {combo: i for i, (_, combo) in enumerate(simplices)}
    # mod-2 reduction with columns as sets of row indices
    lows: List[int] = [-1] * len(simplices)
    pivot_of_row: Dict[int, int] = {}
    stored: List[set] = [None] * len(simplices)
    for j, (_, combo) in enumerate(simplices):
        col = set()
        if len(combo) > 1:
            for i in range(len(combo)):
                col.add(index[combo[:i] + combo[i + 1:]])
        while col:
            low = max(col)
            k = pivot_of_row.get(low)
            if k is None:
                break
            col ^= stored[k]
        if col:
            low = max(col)
            lows[j] = low
            pivot_of_row[low] = j
            stored[j] = col
    order = [(diam, len(combo) - 1) for diam, combo in simplices]
    return _barcode_from_reduction(order, lows, max_degree, eps)
