# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the mod-p rank kernel in _kernels_py.

Dense Gaussian elimination over GF(p) on a flat C buffer.  The moduli in
use are small (at most 32003), so all products fit comfortably in 64
bits.  Only rank_mod is accelerated: the rational routines need big
integers and gain nothing from C arithmetic.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


cdef long long _modinv(long long a, long long p):
    # extended Euclid; a is nonzero mod p, p prime
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod(rows, long long p):
    """Rank of an integer matrix over GF(p)."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = 0
    if m:
        n = len(rows[0])
    if m == 0 or n == 0:
        return 0
    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, c, piv
    cdef long long v, f, inv
    cdef object row
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                v = row[j]
                v = v % p
                if v < 0:
                    v += p
                a[i * n + j] = v
        r = 0
        for c in range(n):
            piv = -1
            for i in range(r, m):
                if a[i * n + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    v = a[r * n + j]
                    a[r * n + j] = a[piv * n + j]
                    a[piv * n + j] = v
            inv = _modinv(a[r * n + c], p)
            if inv != 1:
                for j in range(c, n):
                    a[r * n + j] = (a[r * n + j] * inv) % p
            for i in range(r + 1, m):
                f = a[i * n + c]
                if f != 0:
                    for j in range(c, n):
                        v = (a[i * n + j] - f * a[r * n + j]) % p
                        if v < 0:
                            v += p
                        a[i * n + j] = v
            r += 1
            if r == m:
                break
        return r
    finally:
        free(a)
