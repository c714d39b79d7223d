import random

import numpy as np
import pytest

from lpnerve.chain import (CUSTOM_GRID, EMPTY, STRICT_PREDECESSORS, IntMatrix,
                           SieveSpec, boundary_matrix, generators_at)
from lpnerve.nerve import enumerate_complex
from lpnerve.values import INF, InputError
from lpnerve.vgraph import VGraph
from util import random_honest_space, random_l1_space

GLOBAL = SieveSpec(EMPTY)
STRICT = SieveSpec(STRICT_PREDECESSORS)


def two_point_complex(p=1.0, max_dim=2):
    X = VGraph(["a", "b"], np.array([[0.0, 1.0], [1.0, 0.0]]))
    return enumerate_complex(X, p, max_dim)


def test_sieve_validation():
    with pytest.raises(InputError):
        SieveSpec("bogus")
    with pytest.raises(InputError):
        SieveSpec(CUSTOM_GRID)  # missing grid
    with pytest.raises(InputError):
        # killed grade above the inspection grade
        SieveSpec(CUSTOM_GRID, {1.0: frozenset([2.0])})
    with pytest.raises(InputError):
        # not down-closed: kills 1 but not 0 below it
        SieveSpec(CUSTOM_GRID, {0.0: frozenset(), 1.0: frozenset(),
                                2.0: frozenset([1.0])})
    with pytest.raises(InputError):
        # not monotone in the grade
        SieveSpec(CUSTOM_GRID, {1.0: frozenset([0.0]), 2.0: frozenset()})
    ok = SieveSpec(CUSTOM_GRID, {0.0: frozenset(),
                                 1.0: frozenset([0.0]),
                                 2.0: frozenset([0.0, 1.0])})
    assert ok.kills(0.0, 1.0)
    assert not ok.kills(1.0, 1.0)
    with pytest.raises(InputError):
        ok.kills(0.0, 5.0)  # off the grid


def test_sieve_kinds():
    assert not GLOBAL.kills(0.0, 5.0)
    assert STRICT.kills(0.0, 1.0)
    assert not STRICT.kills(1.0, 1.0)
    assert not STRICT.kills(1.0, 1.0 + 1e-12)


def test_generators_at_global():
    fc = two_point_complex()
    assert [t.verts for t in generators_at(fc, 0, 0.0, GLOBAL)] == [("a",), ("b",)]
    assert generators_at(fc, 1, 0.5, GLOBAL) == []
    assert len(generators_at(fc, 1, 1.0, GLOBAL)) == 2
    assert len(generators_at(fc, 1, 2.0, GLOBAL)) == 2
    assert len(generators_at(fc, 2, 2.0, GLOBAL)) == 2
    with pytest.raises(InputError):
        generators_at(fc, 5, 1.0, GLOBAL)


def test_generators_at_strict():
    fc = two_point_complex()
    # at grade 2 only the tuples born exactly at 2 survive
    assert generators_at(fc, 0, 2.0, STRICT) == []
    assert generators_at(fc, 1, 2.0, STRICT) == []
    assert [t.verts for t in generators_at(fc, 2, 2.0, STRICT)] == [
        ("a", "b", "a"), ("b", "a", "b")]


def test_boundary_global_two_points():
    fc = two_point_complex()
    M = boundary_matrix(fc, 1, 1.0, GLOBAL)
    # d(a,b) = b - a, d(b,a) = a - b
    assert M.entries == [[-1, 1], [1, -1]]
    M2 = boundary_matrix(fc, 2, 2.0, GLOBAL)
    # faces (a,a) and (b,b) are degenerate, so only the middle face remains
    cols = [t.verts for t in M2.col_labels]
    assert cols == [("a", "b", "a"), ("b", "a", "b")]
    for j in range(M2.cols):
        col = [M2.entries[i][j] for i in range(M2.rows)]
        assert sum(abs(v) for v in col) == 2  # d0 and d2 survive


def test_boundary_strict_kills_faces():
    fc = two_point_complex()
    M = boundary_matrix(fc, 2, 2.0, STRICT)
    # every face of a zigzag is born at 1 < 2, so the matrix is zero-shaped
    assert M.rows == 0
    assert M.cols == 2
    assert M.entries == []


def test_boundary_squares_to_zero():
    rng = random.Random(5)
    for make in (random_honest_space, random_l1_space):
        X = make(rng, 4)
        for p in (1.0, 2.0, INF):
            fc = enumerate_complex(X, p, 3)
            for sieve in (GLOBAL, STRICT):
                for r in fc.grades:
                    for n in (2, 3):
                        upper = boundary_matrix(fc, n, r, sieve)
                        lower = boundary_matrix(fc, n - 1, r, sieve)
                        if upper.cols == 0 or lower.rows == 0:
                            continue
                        A = np.array(lower.entries, dtype=int).reshape(
                            lower.rows, lower.cols)
                        B = np.array(upper.entries, dtype=int).reshape(
                            upper.rows, upper.cols)
                        assert not np.any(A @ B)


def test_localization_commutes_with_boundary():
    """The quotient onto exactly-born generators intertwines boundaries."""
    X = random_honest_space(random.Random(9), 5)
    fc = enumerate_complex(X, 1.0, 3)
    for r in fc.grades:
        for n in (1, 2, 3):
            glob = boundary_matrix(fc, n, r, GLOBAL)
            loc = boundary_matrix(fc, n, r, STRICT)
            # quotient matrices: identity on survivors, zero elsewhere
            keep_rows = {t.verts for t in loc.row_labels}
            keep_cols = {t.verts for t in loc.col_labels}
            Qr = [[1 if g.verts == s.verts else 0 for g in glob.row_labels]
                  for s in loc.row_labels]
            Qc = [[1 if g.verts == s.verts else 0 for g in glob.col_labels]
                  for s in loc.col_labels]
            A = np.array(glob.entries, dtype=int).reshape(glob.rows, glob.cols)
            L = np.array(loc.entries, dtype=int).reshape(loc.rows, loc.cols)
            Qr = np.array(Qr, dtype=int).reshape(loc.rows, glob.rows)
            Qc = np.array(Qc, dtype=int).reshape(loc.cols, glob.cols)
            assert np.array_equal(Qr @ A @ Qc.T, L)
            assert keep_rows <= {t.verts for t in glob.row_labels}
            assert keep_cols <= {t.verts for t in glob.col_labels}


def test_exponent_inclusion_commutes_with_boundary():
    """Chains at exponent p include into chains at q >= p compatibly."""
    X = random_honest_space(random.Random(15), 4)
    for p, q in ((1.0, 2.0), (2.0, INF)):
        fp = enumerate_complex(X, p, 2)
        fq = enumerate_complex(X, q, 2)
        for r in fp.grades:
            Mp = boundary_matrix(fp, 1, r, GLOBAL)
            Mq = boundary_matrix(fq, 1, r, GLOBAL)
            # inclusion on generators: birth can only drop as p grows
            p_cols = {t.verts for t in Mp.col_labels}
            q_cols = {t.verts for t in Mq.col_labels}
            assert p_cols <= q_cols
            qi = {t.verts: i for i, t in enumerate(Mq.col_labels)}
            qr = {t.verts: i for i, t in enumerate(Mq.row_labels)}
            for j, t in enumerate(Mp.col_labels):
                for i, s in enumerate(Mp.row_labels):
                    assert Mp.entries[i][j] == \
                        Mq.entries[qr[s.verts]][qi[t.verts]]


def test_int_matrix_triplets():
    M = IntMatrix([[0, 2], [-1, 0]], row_labels=[None, None],
                  col_labels=[None, None])
    assert M.to_triplets() == {
        "rows": 2, "cols": 2, "entries": [[0, 1, 2], [1, 0, -1]]}
