"""Shared test fixtures: random space generators and independent oracles."""

from __future__ import annotations

import itertools
import math
import random
from typing import List, Sequence, Tuple

import numpy as np

from lpnerve.values import EPS, INF, close, tensor_fold
from lpnerve.vgraph import GraphMorphism, VGraph, check_morphism, free_category


# -- random space generators ------------------------------------------


def random_vgraph(rng: random.Random, n: int,
                  alphabet: Sequence[float] = (0.5, 1.0, 1.5, 2.0, 3.0, INF)) -> VGraph:
    """Arbitrary generalized metric space: no laws beyond the zero diagonal."""
    names = [f"v{i}" for i in range(n)]
    mat = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                mat[i, j] = rng.choice(alphabet)
    return VGraph(names, mat)


def random_honest_space(rng: random.Random, n: int, hi: int = 8) -> VGraph:
    """Strict symmetric space satisfying the additive triangle inequality."""
    names = [f"v{i}" for i in range(n)]
    mat = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = float(rng.randint(1, hi))
            mat[i, j] = mat[j, i] = d
    return free_category(VGraph(names, mat), 1.0)


def random_ultrametric(rng: random.Random, n: int) -> VGraph:
    """Dendrogram construction: distance = height of the lowest merge."""
    names = [f"v{i}" for i in range(n)]
    clusters: List[List[int]] = [[i] for i in range(n)]
    mat = np.zeros((n, n))
    height = 0.0
    while len(clusters) > 1:
        height += float(rng.randint(1, 3))
        a, b = rng.sample(range(len(clusters)), 2)
        for i in clusters[a]:
            for j in clusters[b]:
                mat[i, j] = mat[j, i] = height
        merged = clusters[a] + clusters[b]
        clusters = [c for k, c in enumerate(clusters) if k not in (a, b)]
        clusters.append(merged)
    return VGraph(names, mat)


def random_l1_space(rng: random.Random, n: int) -> VGraph:
    """Possibly asymmetric space closed under the additive inequality."""
    X = random_vgraph(rng, n, alphabet=(0.5, 1.0, 1.5, 2.0, 2.5, INF))
    return free_category(X, 1.0)


# -- independent birth-grade oracles ----------------------------------


def sigma_oracle_chains(X: VGraph, verts: Sequence[str], p: float) -> float:
    """Exhaustive maximum over all index chains of forward distances.

    Every subset chain i_0 < ... < i_k is tried, so no optimization from
    the production dynamic program is shared.
    """
    idx = [X.index(v) for v in verts]
    n = len(idx) - 1
    if n == 0:
        return 0.0
    d = X.dist
    if any(math.isinf(d[idx[i], idx[j]])
           for i in range(n + 1) for j in range(i + 1, n + 1)):
        return INF
    best = 0.0
    for mask in range(1, 1 << (n + 1)):
        chain = [k for k in range(n + 1) if mask >> k & 1]
        if len(chain) < 2:
            continue
        hops = [float(d[idx[a], idx[b]]) for a, b in zip(chain, chain[1:])]
        best = max(best, tensor_fold(hops, p))
    return best


def sigma_oracle(X: VGraph, verts: Sequence[str], p: float) -> float:
    """Brute-force witness search for the birth grade.

    Finite p: the witness feasibility system is solved as an explicit LP
    in the p-th-power variables.  p = inf: scan candidate scales and test
    the constant witness vector.
    """
    idx = [X.index(v) for v in verts]
    n = len(idx) - 1
    if n == 0:
        return 0.0
    d = X.dist
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    if any(math.isinf(d[idx[i], idx[j]]) for i, j in pairs):
        return INF
    if p == math.inf:
        candidates = sorted({float(d[idx[i], idx[j]]) for i, j in pairs} | {0.0})
        for r in candidates:
            if all(d[idx[i], idx[j]] <= r + EPS for i, j in pairs):
                return r
        raise AssertionError("unreachable: the largest candidate is feasible")
    from scipy.optimize import linprog

    A_ub = []
    b_ub = []
    for i, j in pairs:
        row = [0.0] * n
        for k in range(i + 1, j + 1):
            row[k - 1] = -1.0
        A_ub.append(row)
        b_ub.append(-float(d[idx[i], idx[j]]) ** p)
    res = linprog(c=[1.0] * n, A_ub=A_ub, b_ub=b_ub,
                  bounds=[(0.0, None)] * n, method="highs")
    assert res.success, res.message
    total = max(res.fun, 0.0)
    return total ** (1.0 / p) if total > 0.0 else 0.0


# -- direct localized-chain construction ------------------------------


def direct_local_generators(X: VGraph, p: float, r: float, degree: int) -> List[Tuple[str, ...]]:
    """Nondegenerate tuples whose consecutive-hop fold equals r exactly.

    Valid for spaces satisfying the +_p triangle inequality, where the
    birth grade is the fold of consecutive hops.
    """
    out = []
    for tup in itertools.product(X.vertices, repeat=degree + 1):
        if any(tup[i] == tup[i + 1] for i in range(degree)):
            continue
        hops = [X.d(tup[i], tup[i + 1]) for i in range(degree)]
        if any(math.isinf(h) for h in hops):
            continue
        if close(tensor_fold(hops, p), r):
            out.append(tup)
    return sorted(out)


def direct_local_boundary(X: VGraph, p: float, r: float, degree: int
                          ) -> Tuple[List[Tuple[str, ...]], List[Tuple[str, ...]], List[List[int]]]:
    """Alternating-face boundary where faces of the wrong total length die."""
    cols = direct_local_generators(X, p, r, degree)
    rows = direct_local_generators(X, p, r, degree - 1)
    row_index = {t: i for i, t in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, tup in enumerate(cols):
        for i in range(degree + 1):
            face = tup[:i] + tup[i + 1:]
            k = row_index.get(face)
            if k is not None:
                entries[k][j] += -1 if i % 2 else 1
    return rows, cols, entries


# -- exhaustive (co)limit checkers ------------------------------------


def all_vertex_maps(A: VGraph, B: VGraph):
    if not A.vertices:
        yield {}
        return
    for images in itertools.product(B.vertices, repeat=len(A.vertices)):
        yield dict(zip(A.vertices, images))


def morphisms(A: VGraph, B: VGraph) -> List[GraphMorphism]:
    out = []
    for m in all_vertex_maps(A, B):
        f = GraphMorphism(A, B, m)
        if check_morphism(f):
            out.append(f)
    return out


def product_projections(Xs: Sequence[VGraph], P: VGraph) -> List[GraphMorphism]:
    """Recover the component projections from the product's vertex order."""
    shape = tuple(len(X) for X in Xs)
    projs = []
    for k, X in enumerate(Xs):
        mapping = {}
        for flat, name in enumerate(P.vertices):
            combo = np.unravel_index(flat, shape)
            mapping[name] = X.vertices[combo[k]]
        projs.append(GraphMorphism(P, X, mapping))
    return projs


def coproduct_injections(Xs: Sequence[VGraph], C: VGraph) -> List[GraphMorphism]:
    injs = []
    offset = 0
    for X in Xs:
        mapping = {X.vertices[i]: C.vertices[offset + i] for i in range(len(X))}
        injs.append(GraphMorphism(X, C, mapping))
        offset += len(X)
    return injs


def unique_factorization(candidates: List[GraphMorphism], predicate) -> bool:
    """Exactly one candidate morphism satisfies the compatibility predicate."""
    return sum(1 for u in candidates if predicate(u)) == 1
