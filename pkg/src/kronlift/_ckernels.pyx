# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 integer kernels.

Same algorithms and return conventions as ``_pykernels``.  Every
arithmetic step is overflow-checked; on overflow ``OverflowError`` is
raised and the caller retries with the arbitrary precision twin.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static int k_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static int k_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    static int k_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    """
    int k_mul(long long a, long long b, long long *r) nogil
    int k_sub(long long a, long long b, long long *r) nogil
    int k_add(long long a, long long b, long long *r) nogil


cdef inline long long floordiv(long long a, long long b) nogil:
    # C truncates toward zero; round toward -inf like Python
    cdef long long q = a / b
    if (a - q * b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long iabs(long long a) nogil:
    return -a if a < 0 else a


cdef int axpy(long long *dst, long long *src, long long q, int start, int stop) nogil:
    """dst[k] -= q * src[k]; returns 1 on overflow."""
    cdef long long t
    cdef int k
    for k in range(start, stop):
        if k_mul(q, src[k], &t):
            return 1
        if k_sub(dst[k], t, &dst[k]):
            return 1
    return 0


cdef void swap_rows(long long *A, int w, int a, int b) nogil:
    cdef long long t
    cdef int k
    for k in range(w):
        t = A[a * w + k]
        A[a * w + k] = A[b * w + k]
        A[b * w + k] = t


cdef int hnf_core(long long *H, long long *U, int m, int n, bint track) nogil:
    """In-place row HNF of the m x n array H; U (m x m) follows if track.

    Returns 1 on overflow, 0 otherwise.
    """
    cdef int piv = 0, j, i, best, k
    cdef long long p, v, q
    cdef bint done
    for j in range(n):
        if piv == m:
            break
        while True:
            best = -1
            for i in range(piv, m):
                v = H[i * n + j]
                if v != 0 and (best < 0 or iabs(v) < iabs(H[best * n + j])):
                    best = i
            if best < 0:
                break
            if best != piv:
                swap_rows(H, n, piv, best)
                if track:
                    swap_rows(U, m, piv, best)
            p = H[piv * n + j]
            done = True
            for i in range(piv + 1, m):
                v = H[i * n + j]
                if v != 0:
                    q = floordiv(v, p)
                    if axpy(&H[i * n], &H[piv * n], q, j, n):
                        return 1
                    if track and axpy(&U[i * m], &U[piv * m], q, 0, m):
                        return 1
                    if H[i * n + j] != 0:
                        done = False
            if done:
                break
        if piv < m and H[piv * n + j] != 0:
            if H[piv * n + j] < 0:
                for k in range(n):
                    H[piv * n + k] = -H[piv * n + k]
                if track:
                    for k in range(m):
                        U[piv * m + k] = -U[piv * m + k]
            p = H[piv * n + j]
            for i in range(piv):
                q = floordiv(H[i * n + j], p)
                if q != 0:
                    if axpy(&H[i * n], &H[piv * n], q, j, n):
                        return 1
                    if track and axpy(&U[i * m], &U[piv * m], q, 0, m):
                        return 1
            piv += 1
    return 0


def hnf_with_transform(rows, int ncols):
    cdef int m = len(rows)
    cdef int i, j
    cdef long long *H = <long long *> malloc(max(m * ncols, 1) * sizeof(long long))
    cdef long long *U = <long long *> malloc(max(m * m, 1) * sizeof(long long))
    if H == NULL or U == NULL:
        free(H)
        free(U)
        raise MemoryError()
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                H[i * ncols + j] = row[j]
            for j in range(m):
                U[i * m + j] = 1 if i == j else 0
        if hnf_core(H, U, m, ncols, True):
            raise OverflowError("int64 overflow in HNF")
        return ([[H[i * ncols + j] for j in range(ncols)] for i in range(m)],
                [[U[i * m + j] for j in range(m)] for i in range(m)])
    finally:
        free(H)
        free(U)


cdef int kernel_core(long long *A, long long *work, int m, int ncols, long long *out) nogil:
    """Nonzero kernel vector of the m x ncols matrix A into out.

    Returns 0 on success, 1 if the matrix is injective, 2 on overflow.
    """
    cdef int w = m + ncols
    cdef int i, j, r
    cdef bint zero
    for j in range(ncols):
        for i in range(m):
            work[j * w + i] = A[i * ncols + j]
        for i in range(ncols):
            work[j * w + m + i] = 1 if i == j else 0
    if hnf_core(work, NULL, ncols, w, False):
        return 2
    for r in range(ncols):
        zero = True
        for i in range(m):
            if work[r * w + i] != 0:
                zero = False
                break
        if zero:
            for i in range(ncols):
                out[i] = work[r * w + m + i]
            return 0
    return 1


def kernel_vector(rows, int ncols):
    cdef int m = len(rows)
    cdef int i, j, status
    cdef long long *A = <long long *> malloc(max(m * ncols, 1) * sizeof(long long))
    cdef long long *work = <long long *> malloc(max(ncols * (m + ncols), 1) * sizeof(long long))
    cdef long long *out = <long long *> malloc(max(ncols, 1) * sizeof(long long))
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                A[i * ncols + j] = row[j]
        status = kernel_core(A, work, m, ncols, out)
        if status == 2:
            raise OverflowError("int64 overflow in kernel")
        if status == 1:
            return None
        return [out[i] for i in range(ncols)]
    finally:
        free(A)
        free(work)
        free(out)


def torus_lift_sweep(int nrows, int ncols, int bound):
    cdef int cells = nrows * ncols
    cdef long long *A = <long long *> malloc(max(cells, 1) * sizeof(long long))
    cdef long long *work = <long long *> malloc(max(ncols * (nrows + ncols), 1) * sizeof(long long))
    cdef long long *out = <long long *> malloc(max(ncols, 1) * sizeof(long long))
    cdef long long checked = 0, failures = 0, s, t
    cdef int i, j, k, status
    cdef bint any_nonzero, bad
    if A == NULL or work == NULL or out == NULL:
        free(A)
        free(work)
        free(out)
        raise MemoryError()
    try:
        with nogil:
            for k in range(cells):
                A[k] = -bound
            while True:
                status = kernel_core(A, work, nrows, ncols, out)
                checked += 1
                bad = status != 0
                if not bad:
                    any_nonzero = False
                    for j in range(ncols):
                        if out[j] != 0:
                            any_nonzero = True
                    bad = not any_nonzero
                if not bad:
                    for i in range(nrows):
                        s = 0
                        for j in range(ncols):
                            t = A[i * ncols + j] * out[j]
                            s += t
                        if s != 0:
                            bad = True
                            break
                if bad:
                    failures += 1
                # odometer; the last cell varies fastest, matching itertools.product
                k = cells - 1
                while k >= 0 and A[k] == bound:
                    A[k] = -bound
                    k -= 1
                if k < 0:
                    break
                A[k] += 1
        return checked, failures
    finally:
        free(A)
        free(work)
        free(out)
