"""Finite-dimensional Hopf algebras by structure tensors.

Conventions: ``delta[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in
``Delta(e_i)``; ``counit[i] = eps(e_i)``; row ``i`` of ``antipode`` holds the
coefficients of ``S(e_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .algebra import AlgebraDef, AlgebraError, Element, TooLarge, algebra_make
from .field import FieldSpec
from .linalg import Subspace, kernel


class HopfAxiomError(AlgebraError):
    pass


class CoassociativityViolation(HopfAxiomError):
    pass


class CounitViolation(HopfAxiomError):
    pass


class ComultiplicationNotMultiplicative(HopfAxiomError):
    pass


class CounitNotMultiplicative(HopfAxiomError):
    pass


class AntipodeViolation(HopfAxiomError):
    pass


class NotAGroup(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class HopfDef:
    algebra: AlgebraDef
    delta: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple:
        return self.algebra.labels

    def __repr__(self):
        return f"HopfDef({self.field}, dim={self.dim}, labels={list(self.labels)})"

    def coproduct(self, h) -> np.ndarray:
        """``Delta(h)`` as a dim x dim coefficient matrix."""
        return self.field.einsum("i,ijk->jk", h, self.delta)

    def delta2(self) -> np.ndarray:
        """``(Delta (x) id) Delta``: coefficient ``[i, a, b, c]`` of ``e_a (x) e_b (x) e_c``."""
        return self.field.einsum("ijc,jab->iabc", self.delta, self.delta)

    def eps(self, h) -> object:
        return self.field.scalar(np.dot(np.asarray(h), self.counit))

    def S(self, h) -> np.ndarray:
        return self.field.dot(np.asarray(h), self.antipode)


def verify_hopf(h: HopfDef) -> None:
    f = h.field
    c, d, e, s = h.algebra.structure, h.delta, h.counit, h.antipode
    n = h.dim
    eye = f.identity(n)
    # coassociativity
    lhs = f.einsum("ijc,jab->iabc", d, d)
    rhs = f.einsum("iak,kbc->iabc", d, d)
    bad = np.argwhere(np.any((lhs != rhs).reshape(n, -1), axis=1))
    if bad.size:
        raise CoassociativityViolation(f"(Delta x id)Delta != (id x Delta)Delta on e{int(bad[0][0])}", witness=(int(bad[0][0]),))
    # counit
    left = f.einsum("j,ijk->ik", e, d)
    right = f.einsum("k,ijk->ij", e, d)
    for i in range(n):
        if np.any(left[i] != eye[i]) or np.any(right[i] != eye[i]):
            raise CounitViolation(f"(eps x id)Delta(e{i}) or (id x eps)Delta(e{i}) != e{i}", witness=(i,))
    # Delta multiplicative and unital
    lhs = f.einsum("ijm,mab->ijab", c, d)
    rhs = f.einsum("ipq,jrs,pra,qsb->ijab", d, d, c, c)
    bad = np.argwhere(np.any((lhs != rhs).reshape(n, n, -1), axis=2))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise ComultiplicationNotMultiplicative(f"Delta(e{i} e{j}) != Delta(e{i}) Delta(e{j})", witness=(i, j))
    u = h.algebra.unit
    if np.any(f.einsum("i,ijk->jk", u, d) != f.einsum("j,k->jk", u, u)):
        raise ComultiplicationNotMultiplicative("Delta(1) != 1 (x) 1", witness=())
    # eps multiplicative and unital
    lhs = f.einsum("ijm,m->ij", c, e)
    rhs = f.einsum("i,j->ij", e, e)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise CounitNotMultiplicative(f"eps(e{i} e{j}) != eps(e{i}) eps(e{j})", witness=(i, j))
    if f.scalar(np.dot(u, e)) != f.scalar(1):
        raise CounitNotMultiplicative("eps(1) != 1", witness=())
    # antipode
    target = f.einsum("i,m->im", e, u)
    left = f.einsum("ijk,jl,lkm->im", d, s, c)
    right = f.einsum("ijk,kl,jlm->im", d, s, c)
    for i in range(n):
        if np.any(left[i] != target[i]) or np.any(right[i] != target[i]):
            raise AntipodeViolation(f"S(h1)h2 or h1S(h2) != eps(h)1 for h = e{i}", witness=(i,))


def hopf_make(algebra: AlgebraDef, delta, counit, antipode, *, check=True) -> HopfDef:
    f, n = algebra.field, algebra.dim
    delta = f.canon(delta)
    counit = f.canon(counit).reshape(n)
    antipode = f.canon(antipode)
    if delta.shape != (n, n, n) or antipode.shape != (n, n):
        raise ValueError("inconsistent Hopf tensor shapes")
    h = HopfDef(algebra, delta, counit, antipode)
    if check:
        verify_hopf(h)
    return h


# -- constructors --------------------------------------------------------------


def check_group(table) -> int:
    """Validate a Cayley table; return the index of the identity."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
        raise NotAGroup("table must be square with entries in range")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a, b], c] != t[a, t[b, c]]:
                    raise NotAGroup("not associative", witness=(a, b, c))
    ids = [e for e in range(n) if all(t[e, a] == a and t[a, e] == a for a in range(n))]
    if not ids:
        raise NotAGroup("no identity")
    e = ids[0]
    for a in range(n):
        if not any(t[a, b] == e and t[b, a] == e for b in range(n)):
            raise NotAGroup(f"element {a} has no inverse", witness=(a,))
    return e


def cyclic_table(n: int) -> list:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def group_algebra(field: FieldSpec, table, labels=None) -> HopfDef:
    e = check_group(table)
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    labels = list(labels) if labels else (["1"] + [f"g{i}" if n > 2 else "g" for i in range(1, n)] if e == 0 else [f"g{i}" for i in range(n)])
    c = field.zeros((n, n, n))
    d = field.zeros((n, n, n))
    s = field.zeros((n, n))
    one = field.scalar(1)
    for a in range(n):
        d[a, a, a] = one
        for b in range(n):
            c[a, b, t[a, b]] = one
            if t[a, b] == e:
                s[a, b] = one
    alg = algebra_make(field, n, c, field.unit_vector(n, e), labels)
    return hopf_make(alg, d, field.canon(np.ones(n, dtype=np.int64)), s)


def cyclic_group_algebra(field: FieldSpec, n: int) -> HopfDef:
    labels = ["1"] + (["g"] if n == 2 else [f"g{i}" for i in range(1, n)])
    return group_algebra(field, cyclic_table(n), labels)


def dual_hopf(h: HopfDef, labels=None) -> HopfDef:
    """``H*`` on the dual basis ``p_i``: every structure tensor is transposed."""
    f = h.field
    c = np.transpose(h.delta, (1, 2, 0))  # (p_i p_j)(e_k) = d[k, i, j]
    d = np.transpose(h.algebra.structure, (2, 0, 1))  # Delta(p_k) = sum c[i, j, k] p_i (x) p_j
    labels = labels or [f"p_{lab}" for lab in h.labels]
    alg = algebra_make(f, h.dim, c, h.counit, labels)
    return hopf_make(alg, d, h.algebra.unit, h.antipode.T)


def restricted_env(field: FieldSpec, lam=1) -> HopfDef:
    """u(kd): basis 1, d, ..., d^(p-1) with d^p = lam*d and d primitive."""
    if not field.is_finite:
        raise ValueError("restricted enveloping algebras need characteristic p > 0")
    p = field.p
    lam = field.scalar(lam)
    c = field.zeros((p, p, p))
    for a in range(p):
        for b in range(p):
            if a + b < p:
                c[a, b, a + b] = 1
            else:
                c[a, b, a + b - p + 1] = lam
    d = field.zeros((p, p, p))
    for a in range(p):
        for b in range(a + 1):
            d[a, b, a - b] = comb(a, b) % p
    s = field.zeros((p, p))
    for a in range(p):
        s[a, a] = field.scalar((-1) ** a)
    labels = ["1", "d"] + [f"d^{a}" for a in range(2, p)]
    alg = algebra_make(field, p, c, field.unit_vector(p, 0), labels)
    return hopf_make(alg, d, field.unit_vector(p, 0), s)


# -- integrals and structure flags ---------------------------------------------


def left_integral(h: HopfDef) -> Subspace:
    """``{L : e_i L = eps(e_i) L for every basis e_i}``."""
    f, n = h.field, h.dim
    eye = f.identity(n)
    lm = h.algebra.left_matrices()
    rows = np.concatenate([f.canon(lm[i] - h.counit[i] * eye) for i in range(n)])
    return kernel(f, rows)


def is_semisimple_hopf(h: HopfDef) -> bool:
    integral = left_integral(h)
    return bool(np.any(h.field.dot(integral.basis, h.counit) != 0))


def is_cosemisimple_hopf(h: HopfDef) -> bool:
    return is_semisimple_hopf(dual_hopf(h))


def is_commutative(h: HopfDef) -> bool:
    return h.algebra.is_commutative()


def is_cocommutative(h: HopfDef) -> bool:
    return bool(np.all(h.delta == np.transpose(h.delta, (0, 2, 1))))


def is_grouplike(h: HopfDef, g) -> bool:
    f = h.field
    g = f.canon(g)
    return f.scalar(np.dot(g, h.counit)) == f.scalar(1) and bool(
        np.all(h.coproduct(g) == f.einsum("j,k->jk", g, g))
    )


def grouplikes(h: HopfDef, candidates=None, limit: int = 3**8) -> list:
    """Grouplike elements: all of them over a finite field, else the grouplike candidates."""
    f = h.field
    if candidates is None:
        if not f.is_finite:
            raise TooLarge("grouplike enumeration over Q needs a candidate list")
        if f.order**h.dim > limit:
            raise TooLarge("Hopf algebra too large to enumerate")
        vecs = f.all_vectors(h.dim)
        # eps(g) = 1 and Delta(g) = g (x) g, vectorised
        ok = (vecs @ h.counit) % f.p == 1
        vecs = vecs[ok]
        cop = np.mod(np.einsum("ai,ijk->ajk", vecs, h.delta), f.p)
        outer = np.mod(np.einsum("aj,ak->ajk", vecs, vecs), f.p)
        keep = np.all((cop == outer).reshape(len(vecs), -1), axis=1)
        candidates = vecs[keep]
    out = [Element(h.algebra, f.canon(g)) for g in candidates if is_grouplike(h, g)]
    return sorted(out, key=lambda e: tuple(f.format(x) for x in e.coeffs))


def group_table_if_group_algebra(h: HopfDef):
    """Cayley table when the basis consists of grouplikes closed under products."""
    f, n = h.field, h.dim
    eye = f.identity(n)
    if not all(is_grouplike(h, eye[i]) for i in range(n)):
        return None
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = h.algebra.structure[i, j]
            nz = np.flatnonzero(prod)
            if len(nz) != 1 or prod[nz[0]] != f.scalar(1):
                return None
            row.append(int(nz[0]))
        table.append(row)
    return table


def group_table_if_dual_group_algebra(h: HopfDef):
    """Cayley table of G when ``h`` is ``(kG)*`` on the dual basis ``p_g``."""
    return group_table_if_group_algebra(dual_hopf(h))


def antipode_squared_is_identity(h: HopfDef) -> bool:
    f = h.field
    return bool(np.all(f.dot(h.antipode, h.antipode) == f.identity(h.dim)))
