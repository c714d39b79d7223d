# cython: boundscheck=False, wraparound=False, cdivision=True
"""Exhaustive closure-law sweep over small graphs with a fixed alphabet.

Each 4-vertex graph over the distance alphabet {0, 1, 2, inf} is encoded
as a base-4 integer over its 12 off-diagonal entries.  For each graph the
sweep computes the (min, +_p) path closure for p in {1, 2, inf} and
verifies, elementwise:

  * the closure is pointwise <= the original matrix,
  * the closure is idempotent (a second pass changes nothing),
  * the closure satisfies the +_p triangle inequality,
  * closures are pointwise nonincreasing in p,
  * the original matrix satisfies the +_p triangle inequality exactly
    when the closure fixes it (the lift-existence characterization).

Returns the number of graphs failing any check plus the first failing
code, so a failure is reproducible from Python.
"""

from libc.math cimport INFINITY, sqrt


cdef inline void _decode(long code, double* d) nogil:
    cdef double vals[4]
    cdef int i, j, k
    cdef long c = code
    vals[0] = 0.0
    vals[1] = 1.0
    vals[2] = 2.0
    vals[3] = INFINITY
    for i in range(4):
        for j in range(4):
            d[4 * i + j] = 0.0
    for i in range(4):
        for j in range(4):
            if i != j:
                d[4 * i + j] = vals[c & 3]
                c >>= 2


cdef inline void _fw_add(double* w) nogil:
    cdef int i, j, k
    cdef double cand
    for k in range(4):
        for i in range(4):
            for j in range(4):
                cand = w[4 * i + k] + w[4 * k + j]
                if cand < w[4 * i + j]:
                    w[4 * i + j] = cand


cdef inline void _fw_max(double* w) nogil:
    cdef int i, j, k
    cdef double cand
    for k in range(4):
        for i in range(4):
            for j in range(4):
                cand = w[4 * i + k]
                if w[4 * k + j] > cand:
                    cand = w[4 * k + j]
                if cand < w[4 * i + j]:
                    w[4 * i + j] = cand


cdef inline bint _leq_all(double* a, double* b, double eps) nogil:
    """a <= b elementwise, tolerant at finite values, exact at infinity."""
    cdef int t
    for t in range(16):
        if a[t] == INFINITY:
            if b[t] != INFINITY:
                return 0
        elif b[t] != INFINITY and a[t] > b[t] + eps:
            return 0
    return 1


cdef inline bint _equal_all(double* a, double* b, double eps) nogil:
    return _leq_all(a, b, eps) and _leq_all(b, a, eps)


cdef inline bint _triangle_add(double* w, double eps) nogil:
    cdef int a, b, c
    for a in range(4):
        for c in range(4):
            for b in range(4):
                if w[4 * a + b] + w[4 * b + c] < w[4 * a + c] - eps:
                    return 0
    return 1


cdef inline bint _triangle_max(double* w, double eps) nogil:
    cdef int a, b, c
    cdef double via
    for a in range(4):
        for c in range(4):
            for b in range(4):
                via = w[4 * a + b]
                if w[4 * b + c] > via:
                    via = w[4 * b + c]
                if via < w[4 * a + c] - eps:
                    return 0
    return 1


def sweep_four_vertex(long start, long count, double eps=1e-9):
    """Run the closure-law checks on codes [start, start + count).

    Returns (failures, first_failing_code); first_failing_code is -1 when
    everything passes.
    """
    cdef long code, failures = 0, first_bad = -1
    cdef double d[16]
    cdef double sq[16]
    cdef double c1[16]
    cdef double c2pow[16]
    cdef double c2[16]
    cdef double cm[16]
    cdef double again[16]
    cdef int t
    cdef bint ok, cat1, cat2, catm
    with nogil:
        for code in range(start, start + count):
            _decode(code, d)
            for t in range(16):
                sq[t] = d[t] * d[t]
                c1[t] = d[t]
                c2pow[t] = sq[t]
                cm[t] = d[t]
            _fw_add(c1)
            _fw_add(c2pow)
            _fw_max(cm)
            for t in range(16):
                c2[t] = sqrt(c2pow[t])
            ok = 1
            # pointwise <= original
            if not _leq_all(c1, d, eps) or not _leq_all(c2, d, eps) \
                    or not _leq_all(cm, d, eps):
                ok = 0
            # idempotent
            if ok:
                for t in range(16):
                    again[t] = c1[t]
                _fw_add(again)
                if not _equal_all(again, c1, eps):
                    ok = 0
            if ok:
                for t in range(16):
                    again[t] = c2pow[t]
                _fw_add(again)
                for t in range(16):
                    again[t] = sqrt(again[t])
                if not _equal_all(again, c2, eps):
                    ok = 0
            if ok:
                for t in range(16):
                    again[t] = cm[t]
                _fw_max(again)
                if not _equal_all(again, cm, eps):
                    ok = 0
            # the closure satisfies its own triangle inequality
            if ok and (not _triangle_add(c1, eps)
                       or not _triangle_add(c2pow, eps)
                       or not _triangle_max(cm, eps)):
                ok = 0
            # closures shrink as p grows
            if ok and (not _leq_all(c2, c1, eps) or not _leq_all(cm, c2, eps)):
                ok = 0
            # lift existence iff the closure fixes the matrix
            if ok:
                cat1 = _triangle_add(d, eps)
                cat2 = _triangle_add(sq, eps)
                catm = _triangle_max(d, eps)
                if cat1 != _equal_all(c1, d, eps) \
                        or cat2 != _equal_all(c2, d, eps) \
                        or catm != _equal_all(cm, d, eps):
                    ok = 0
            if not ok:
                failures += 1
                if first_bad < 0:
                    first_bad = code
    return failures, first_bad


def closure_of_code(long code, int mode):
    """Closure of one encoded graph: mode 1 additive, 2 quadratic, 0 max.

    Returns a flat 16-entry list, for cross-checking against the library
    path closure.
    """
    cdef double d[16]
    cdef int t
    _decode(code, d)
    if mode == 1:
        _fw_add(d)
    elif mode == 2:
        for t in range(16):
            d[t] = d[t] * d[t]
        _fw_add(d)
        for t in range(16):
            d[t] = sqrt(d[t])
    else:
        _fw_max(d)
    return [d[t] for t in range(16)]
