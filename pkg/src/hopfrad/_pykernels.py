"""Pure Python / numpy kernels, used when the compiled core is unavailable.

The GF(p) routines mirror ``_ckernels.pyx`` exactly.  The ``*_generic``
routines work on object arrays of Fractions and are always pure Python.
"""

import numpy as np

NAME = "python"


def rref_modp(m, p):
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def charpoly_modp(m, p):
    """Coefficients ``[1, c1, ..., cn]`` of det(tI - m) over GF(p), by Berkowitz."""
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    poly = np.ones(1, dtype=np.int64)
    for r in range(n):
        # grow the leading block by row/column r: [[S, C], [R, a_rr]]
        s = a[:r, :r]
        col = a[:r, r]
        row = a[r, :r]
        q = np.zeros(r + 2, dtype=np.int64)
        q[0] = 1
        q[1] = (-a[r, r]) % p
        v = col.copy()
        for k in range(2, r + 2):
            q[k] = (-int(row @ v)) % p
            v = (s @ v) % p
        new = np.zeros(r + 2, dtype=np.int64)
        for i in range(r + 1):
            new[i:] = (new[i:] + q[: r + 2 - i] * poly[i]) % p
        poly = new
    return poly


def charpoly_modp_batch(mats, p):
    mats = np.asarray(mats, dtype=np.int64)
    out = np.empty((mats.shape[0], mats.shape[1] + 1), dtype=np.int64)
    for i in range(mats.shape[0]):
        out[i] = charpoly_modp(mats[i], p)
    return out


def rref_generic(m):
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for j in range(rows):
            f = a[j][c]
            if j != r and f != 0:
                a[j] = [x - f * y for x, y in zip(a[j], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def charpoly_generic(m):
    a = [list(row) for row in m]
    n = len(a)
    zero = a[0][0] * 0 if n else 0
    one = zero + 1
    poly = [one]
    for r in range(n):
        q = [one, -a[r][r]]
        v = [a[i][r] for i in range(r)]
        for _ in range(r):
            q.append(-sum((a[r][j] * v[j] for j in range(r)), zero))
            v = [sum((a[i][j] * v[j] for j in range(r)), zero) for i in range(r)]
        new = [zero] * (r + 2)
        for i, c in enumerate(poly):
            for k in range(r + 2 - i):
                new[i + k] += q[k] * c
        poly = new
    return poly
