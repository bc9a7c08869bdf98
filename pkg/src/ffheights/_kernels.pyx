# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels over F_p.

Same contract as ``_kernels_py``: coefficient lists of ints in [0, p),
constant term first, no trailing zeros.  Assumes p fits comfortably in
32 bits so products accumulate in 64-bit without overflow checks.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "compiled"


cdef long long* _to_c(list a) except NULL:
    cdef Py_ssize_t i, n = len(a)
    cdef long long* buf = <long long*> PyMem_Malloc((n if n else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    return buf


def poly_mul(list a, list b, long long p):
    """Product of two coefficient lists modulo p."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t i, j, n = na + nb - 1
    cdef long long* ca = _to_c(a)
    cdef long long* cb = _to_c(b)
    cdef long long* out = <long long*> PyMem_Malloc(n * sizeof(long long))
    if out == NULL:
        PyMem_Free(ca)
        PyMem_Free(cb)
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    cdef long long ai
    # Accumulators stay below 2^62 as long as p^2 * block does; reduce
    # periodically so even large p with huge operands stays safe.
    cdef long long block = ((<long long> 1) << 62) / (p * p)
    if block < 1:
        block = 1
    cdef long long done = 0
    for i in range(na):
        ai = ca[i]
        if ai:
            for j in range(nb):
                out[i + j] += ai * cb[j]
        done += 1
        if done == block:
            for j in range(n):
                out[j] %= p
            done = 0
    while n > 0 and out[n - 1] % p == 0:
        n -= 1
    result = [out[i] % p for i in range(n)]
    PyMem_Free(ca)
    PyMem_Free(cb)
    PyMem_Free(out)
    return result


def poly_divmod(list a, list b, long long p):
    """Quotient and remainder of coefficient lists modulo p."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return [], list(a)
    cdef Py_ssize_t db = nb - 1
    cdef long long* rem = _to_c(a)
    cdef long long* cb = _to_c(b)
    cdef Py_ssize_t nq = na - db
    cdef long long* quot = <long long*> PyMem_Malloc(nq * sizeof(long long))
    if quot == NULL:
        PyMem_Free(rem)
        PyMem_Free(cb)
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nq):
        quot[i] = 0
    cdef long long inv_lead = 1, base = cb[db] % p, e = p - 2
    while e:
        if e & 1:
            inv_lead = (inv_lead * base) % p
        base = (base * base) % p
        e >>= 1
    cdef long long c, q
    for i in range(na - 1, db - 1, -1):
        c = rem[i] % p
        if c < 0:
            c += p
        if c:
            q = (c * inv_lead) % p
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - q * cb[j]) % p
        rem[i] = 0
    cdef Py_ssize_t nr = db
    while nr > 0 and (rem[nr - 1] % p + p) % p == 0:
        nr -= 1
    rlist = [(rem[i] % p + p) % p for i in range(nr)]
    while nq > 0 and quot[nq - 1] == 0:
        nq -= 1
    qlist = [quot[i] for i in range(nq)]
    PyMem_Free(rem)
    PyMem_Free(cb)
    PyMem_Free(quot)
    return qlist, rlist
