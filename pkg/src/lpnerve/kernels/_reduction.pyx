# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled persistence column reduction over a prime field.

Same contract as ``_reduction_py.reduce_columns``: columns as parallel
lists of increasing row indices and coefficients mod q; returns the list
of reduced pivot rows (-1 for columns that vanish).
"""

from libc.stdlib cimport free, malloc, realloc


cdef struct Column:
    long *rows
    long *coeffs
    long size
    long cap


cdef inline long mod_inverse(long a, long q):
    # Fermat: q is prime and a != 0 mod q.
    cdef long result = 1
    cdef long base = a % q
    cdef long e = q - 2
    while e > 0:
        if e & 1:
            result = (result * base) % q
        base = (base * base) % q
        e >>= 1
    return result


cdef int column_axpy(Column *dst, Column *a, Column *b, long scale, long q) except -1:
    """dst = a + scale * b over GF(q); dst must be distinct storage."""
    cdef long need = a.size + b.size
    if dst.cap < need:
        dst.rows = <long *> realloc(dst.rows, need * sizeof(long))
        dst.coeffs = <long *> realloc(dst.coeffs, need * sizeof(long))
        if dst.rows == NULL or dst.coeffs == NULL:
            raise MemoryError()
        dst.cap = need
    cdef long i = 0, k = 0, n = 0, c
    while i < a.size or k < b.size:
        if k >= b.size or (i < a.size and a.rows[i] < b.rows[k]):
            dst.rows[n] = a.rows[i]
            dst.coeffs[n] = a.coeffs[i]
            n += 1
            i += 1
        elif i >= a.size or b.rows[k] < a.rows[i]:
            c = (b.coeffs[k] * scale) % q
            if c != 0:
                dst.rows[n] = b.rows[k]
                dst.coeffs[n] = c
                n += 1
            k += 1
        else:
            c = (a.coeffs[i] + b.coeffs[k] * scale) % q
            if c != 0:
                dst.rows[n] = a.rows[i]
                dst.coeffs[n] = c
                n += 1
            i += 1
            k += 1
    dst.size = n
    return 0


def reduce_columns(col_rows, col_coeffs, long q):
    if q < 2:
        raise ValueError("field order must be a prime >= 2")
    cdef long ncols = len(col_rows)
    cdef long nrows = 0
    cdef long i, j, m, low, k, factor
    cdef Column *cols = <Column *> malloc(ncols * sizeof(Column))
    cdef Column scratch
    cdef Column tmp
    cdef long *pivot_of_row = NULL
    if cols == NULL:
        raise MemoryError()
    for j in range(ncols):
        cols[j].rows = NULL
        cols[j].coeffs = NULL
        cols[j].size = 0
        cols[j].cap = 0
    scratch.rows = NULL
    scratch.coeffs = NULL
    scratch.size = 0
    scratch.cap = 0
    lows = [-1] * ncols
    try:
        for j in range(ncols):
            rows_list = col_rows[j]
            coeffs_list = col_coeffs[j]
            m = len(rows_list)
            cols[j].rows = <long *> malloc((m if m > 0 else 1) * sizeof(long))
            cols[j].coeffs = <long *> malloc((m if m > 0 else 1) * sizeof(long))
            if cols[j].rows == NULL or cols[j].coeffs == NULL:
                raise MemoryError()
            cols[j].size = m
            cols[j].cap = m if m > 0 else 1
            for i in range(m):
                cols[j].rows[i] = rows_list[i]
                cols[j].coeffs[i] = coeffs_list[i] % q
                if cols[j].rows[i] + 1 > nrows:
                    nrows = cols[j].rows[i] + 1
        if ncols > nrows:
            nrows = ncols
        pivot_of_row = <long *> malloc(nrows * sizeof(long))
        if pivot_of_row == NULL:
            raise MemoryError()
        for i in range(nrows):
            pivot_of_row[i] = -1
        for j in range(ncols):
            while cols[j].size > 0:
                low = cols[j].rows[cols[j].size - 1]
                k = pivot_of_row[low]
                if k < 0:
                    break
                factor = (cols[j].coeffs[cols[j].size - 1]
                          * mod_inverse(cols[k].coeffs[cols[k].size - 1], q)) % q
                column_axpy(&scratch, &cols[j], &cols[k], q - factor, q)
                tmp = cols[j]
                cols[j] = scratch
                scratch = tmp
            if cols[j].size > 0:
                low = cols[j].rows[cols[j].size - 1]
                lows[j] = low
                pivot_of_row[low] = j
        return lows
    finally:
        for j in range(ncols):
            free(cols[j].rows)
            free(cols[j].coeffs)
        free(cols)
        free(scratch.rows)
        free(scratch.coeffs)
        free(pivot_of_row)
