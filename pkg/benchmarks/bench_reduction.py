"""Compare the compiled and pure-Python persistence reduction kernels.

Usage: python benchmarks/bench_reduction.py [points]

Builds the p = inf tuple complex of a random honest metric space, extracts
the boundary columns exactly as the barcode pipeline does, and times both
backends on identical input.  Results are also cross-checked for equality.
"""

import random
import sys
import time

import numpy as np

from lpnerve import kernels
from lpnerve.nerve import enumerate_complex, is_degenerate
from lpnerve.values import INF
from lpnerve.vgraph import VGraph, free_category


def honest_space(rng, n):
    mat = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            mat[i, j] = mat[j, i] = float(rng.randint(1, 9))
    return free_category(VGraph([f"v{i}" for i in range(n)], mat), 1.0)


def boundary_columns(fc, q):
    simplices = [t for level in fc.tuples for t in level]
    simplices.sort(key=lambda t: (t.birth, t.degree, t.verts))
    index = {t.verts: i for i, t in enumerate(simplices)}
    col_rows, col_coeffs = [], []
    for t in simplices:
        entries = {}
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
    return col_rows, col_coeffs


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    q = 2
    rng = random.Random(0)
    X = honest_space(rng, n)
    fc = enumerate_complex(X, INF, 3)
    col_rows, col_coeffs = boundary_columns(fc, q)
    print(f"{n} points, {len(col_rows)} columns, GF({q}), "
          f"active backend: {kernels.BACKEND}")

    t0 = time.perf_counter()
    compiled = kernels.reduce_columns(col_rows, col_coeffs, q)
    t1 = time.perf_counter()
    pure = kernels.reduce_columns_py(col_rows, col_coeffs, q)
    t2 = time.perf_counter()

    assert compiled == pure, "backends disagree"
    print(f"active backend : {t1 - t0:8.3f} s")
    print(f"pure Python    : {t2 - t1:8.3f} s")
    if kernels.BACKEND == "compiled" and t1 > t0:
        print(f"speedup        : {(t2 - t1) / (t1 - t0):8.1f}x")


if __name__ == "__main__":
    main()
