# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels: row reduction and Berkowitz characteristic polynomials.

Residues fit comfortably in int64 for p <= 97; every product is reduced
before it is accumulated.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 result = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


def rref_modp(m, long p):
    cdef cnp.ndarray[i64, ndim=2] arr = np.array(m, dtype=np.int64) % p
    cdef i64[:, :] a = arr
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
                        if a[i, j] < 0:
                            a[i, j] += p
        pivots.append(c)
        r += 1
    return arr, pivots


cdef void _charpoly(i64[:, :] a, i64 p, i64[:] poly, i64[:] newp, i64[:] q,
                    i64[:] v, i64[:] w) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0], r, k, i, j
    cdef i64 acc
    poly[0] = 1
    for r in range(n):
        q[0] = 1
        q[1] = (p - a[r, r]) % p
        for i in range(r):
            v[i] = a[i, r]
        for k in range(2, r + 2):
            acc = 0
            for j in range(r):
                acc = (acc + a[r, j] * v[j]) % p
            q[k] = (p - acc) % p
            for i in range(r):
                acc = 0
                for j in range(r):
                    acc = (acc + a[i, j] * v[j]) % p
                w[i] = acc
            for i in range(r):
                v[i] = w[i]
        for i in range(r + 2):
            newp[i] = 0
        for i in range(r + 1):
            for k in range(r + 2 - i):
                newp[i + k] = (newp[i + k] + q[k] * poly[i]) % p
        for i in range(r + 2):
            poly[i] = newp[i]


def charpoly_modp(m, long p):
    """Coefficients ``[1, c1, ..., cn]`` of det(tI - m) over GF(p)."""
    cdef cnp.ndarray[i64, ndim=2] arr = np.ascontiguousarray(np.asarray(m, dtype=np.int64) % p)
    cdef Py_ssize_t n = arr.shape[0]
    out = np.zeros(n + 1, dtype=np.int64)
    scratch = np.zeros((4, n + 2), dtype=np.int64)
    _charpoly(arr, p, out, scratch[0], scratch[1], scratch[2], scratch[3])
    return out


def charpoly_modp_batch(mats, long p):
    cdef cnp.ndarray[i64, ndim=3] arr = np.ascontiguousarray(np.asarray(mats, dtype=np.int64) % p)
    cdef Py_ssize_t count = arr.shape[0], n = arr.shape[1], b
    out = np.zeros((count, n + 1), dtype=np.int64)
    scratch = np.zeros((4, n + 2), dtype=np.int64)
    cdef i64[:, :, :] av = arr
    cdef i64[:, :] ov = out
    cdef i64[:, :] sv = scratch
    with nogil:
        for b in range(count):
            _charpoly(av[b], p, ov[b], sv[0], sv[1], sv[2], sv[3])
    return out
