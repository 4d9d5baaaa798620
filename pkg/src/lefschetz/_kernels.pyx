# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer row reduction on 64-bit machine words.

Same contract as ``_kernels_py.rref``.  Any intermediate that would leave
the int64 range raises ``OverflowError`` so the caller can fall back to
arbitrary-precision Python integers.
"""

from libc.limits cimport LLONG_MIN
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int lf_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lf_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int lf_mul_ovf(long long a, long long b, long long *r) nogil
    int lf_sub_ovf(long long a, long long b, long long *r) nogil


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline void _primitive(long long *row, Py_ssize_t ncols) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] //= g


cdef int _reduce(long long *a, Py_ssize_t n, Py_ssize_t ncols, Py_ssize_t *piv, Py_ssize_t *rank) nogil:
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef long long pv, x, t1, t2, tmp
    cdef long long *pr
    cdef long long *ri
    for c in range(ncols):
        if r == n:
            break
        p = r
        while p < n and a[p * ncols + c] == 0:
            p += 1
        if p == n:
            continue
        if p != r:
            for j in range(ncols):
                tmp = a[r * ncols + j]
                a[r * ncols + j] = a[p * ncols + j]
                a[p * ncols + j] = tmp
        pr = a + r * ncols
        if pr[c] < 0:
            for j in range(ncols):
                if pr[j] == LLONG_MIN:
                    return -1
                pr[j] = -pr[j]
        _primitive(pr, ncols)
        pv = pr[c]
        for i in range(n):
            ri = a + i * ncols
            x = ri[c]
            if i == r or x == 0:
                continue
            for j in range(ncols):
                if lf_mul_ovf(pv, ri[j], &t1) or lf_mul_ovf(x, pr[j], &t2) or lf_sub_ovf(t1, t2, &ri[j]):
                    return -1
            _primitive(ri, ncols)
        piv[r] = c
        r += 1
    rank[0] = r
    return 0


def rref(rows, Py_ssize_t ncols):
    rows = [r for r in rows if any(r)]
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, rank = 0
    cdef long long *a
    cdef Py_ssize_t *piv
    cdef int status
    if n == 0 or ncols == 0:
        return [], []
    a = <long long *> malloc(n * ncols * sizeof(long long))
    piv = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if a == NULL or piv == NULL:
        free(a)
        free(piv)
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j]
        with nogil:
            status = _reduce(a, n, ncols, piv, &rank)
        if status:
            raise OverflowError("int64 overflow during row reduction")
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(rank)]
        return out, [piv[i] for i in range(rank)]
    finally:
        free(a)
        free(piv)
