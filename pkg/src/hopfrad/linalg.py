"""Canonical exact linear algebra: RREF, kernels and the subspace lattice.

A :class:`Subspace` always stores its basis in reduced row-echelon form, so
two subspaces are equal exactly when their basis arrays coincide.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._backend import kernels
from ._pykernels import charpoly_generic, rref_generic
from .field import FieldSpec


class DimensionMismatch(ValueError):
    pass


class RREF(NamedTuple):
    reduced: np.ndarray
    pivots: list
    rank: int


def rref(field: FieldSpec, m) -> RREF:
    """Reduced row-echelon form of ``m`` (zero rows kept at the bottom)."""
    m = field.canon(m)
    if m.ndim != 2:
        raise ValueError("rref expects a matrix")
    if m.size == 0:
        return RREF(m.copy(), [], 0)
    if field.is_finite:
        reduced, pivots = kernels.rref_modp(m, field.p)
        reduced = np.asarray(reduced, dtype=np.int64)
    else:
        rows, pivots = rref_generic(m.tolist())
        reduced = field.canon(np.array(rows, dtype=object).reshape(m.shape))
    return RREF(reduced, list(pivots), len(pivots))


def rank(field: FieldSpec, m) -> int:
    return rref(field, m).rank


def charpoly(field: FieldSpec, m) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of det(tI - m), computed division-free."""
    m = field.canon(m)
    if field.is_finite:
        return [int(x) for x in kernels.charpoly_modp(m, field.p)]
    return charpoly_generic(m.tolist()) if m.shape[0] else [field.scalar(1)]


def charpoly_batch(field: FieldSpec, mats) -> np.ndarray:
    mats = field.canon(mats)
    if field.is_finite:
        return np.asarray(kernels.charpoly_modp_batch(mats, field.p), dtype=np.int64)
    rows = [charpoly(field, m) for m in mats]
    return field.canon(np.array(rows, dtype=object).reshape(len(rows), mats.shape[1] + 1))


class Subspace:
    """A subspace of ``field^ambient_dim`` held by its canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_key")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis, *, _canonical=False):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        if _canonical:
            self.basis = basis
            self.pivots = [int(np.flatnonzero(row != 0)[0]) for row in basis]
        else:
            b = field.canon(basis).reshape(-1, self.ambient_dim) if np.size(basis) else field.zeros((0, self.ambient_dim))
            red = rref(field, b)
            self.basis = red.reduced[: red.rank].copy()
            self.pivots = red.pivots
        self.basis.setflags(write=False)
        self._key = None

    # constructors
    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors) -> "Subspace":
        return cls(field, ambient_dim, vectors)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, field.zeros((0, n)), _canonical=True)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, field.identity(n), _canonical=True)

    # basic properties
    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def key(self) -> tuple:
        if self._key is None:
            f = self.field
            if f.is_finite:
                data = np.ascontiguousarray(self.basis, dtype=np.int64).tobytes()
            else:
                data = tuple(f.format(x) for x in self.basis.reshape(-1))
            self._key = (f.characteristic, self.ambient_dim, self.dim, data)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return (self.dim, self.key()) < (other.dim, other.key())

    def __repr__(self):
        rows = [" ".join(self.field.format(x) for x in row) for row in self.basis]
        return f"Subspace({self.field}, n={self.ambient_dim}, basis=[{'; '.join(rows)}])"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")

    # membership and reduction
    def reduce(self, v) -> np.ndarray:
        """Reduce ``v`` modulo this subspace: zero in every pivot column."""
        f = self.field
        v = f.canon(np.array(v, dtype=f.dtype, copy=True))
        for row, c in zip(self.basis, self.pivots):
            coeff = v[..., c]
            if np.ndim(coeff) == 0:
                if coeff != 0:
                    v = f.canon(v - coeff * row)
            else:
                v = f.canon(v - np.multiply.outer(coeff, row))
        return v

    def contains(self, v) -> bool:
        v = np.asarray(v)
        if v.shape[-1] != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {v.shape[-1]} in ambient {self.ambient_dim}")
        return not np.any(self.reduce(v) != 0)

    def contains_all(self, vectors) -> bool:
        vectors = np.asarray(vectors)
        if vectors.size == 0:
            return True
        return not np.any(self.reduce(vectors.reshape(-1, self.ambient_dim)) != 0)

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return other.contains_all(self.basis)

    __le__ = issubset

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of ``v`` (assumed in the subspace) on the RREF basis."""
        v = np.asarray(v)
        return self.field.canon(v[..., self.pivots])

    def complement_coords(self) -> list:
        """Non-pivot coordinates: the canonical complement used for quotients."""
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def annihilator(self) -> np.ndarray:
        """Rows spanning the linear forms vanishing on the subspace."""
        return kernel(self.field, self.basis).basis if self.dim else self.field.identity(self.ambient_dim)

    # lattice operations
    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def elements(self) -> np.ndarray:
        """All vectors of the subspace (finite fields only)."""
        coeffs = self.field.all_vectors(self.dim)
        if self.dim == 0:
            return self.field.zeros((1, self.ambient_dim))
        return self.field.dot(coeffs, self.basis)


def kernel(field: FieldSpec, m) -> Subspace:
    """The canonical subspace ``{x : m x = 0}``."""
    m = field.canon(m)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.full(field, cols)
    red = rref(field, m)
    piv = red.pivots
    free = [j for j in range(cols) if j not in set(piv)]
    basis = field.zeros((len(free), cols))
    one = field.scalar(1)
    for t, j in enumerate(free):
        basis[t, j] = one
        for r, c in enumerate(piv):
            basis[t, c] = field.scalar(-red.reduced[r, j])
    return Subspace(field, cols, basis)


def solve(field: FieldSpec, m, b):
    """One solution ``x`` of ``m x = b``, or ``None`` when inconsistent."""
    m = field.canon(m)
    b = field.canon(b).reshape(-1, 1)
    aug = np.concatenate([m, b], axis=1)
    red = rref(field, aug)
    cols = m.shape[1]
    if cols in red.pivots:
        return None
    x = field.zeros(cols)
    for r, c in enumerate(red.pivots):
        x[c] = red.reduced[r, cols]
    return x


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    return Subspace(a.field, a.ambient_dim, np.concatenate([a.basis, b.basis]))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coordinate system [A; -B]^T."""
    a._check(b)
    f = a.field
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(f, a.ambient_dim)
    stacked = np.concatenate([a.basis, f.canon(-b.basis)]).T
    rel = kernel(f, stacked)
    if rel.dim == 0:
        return Subspace.zero(f, a.ambient_dim)
    return Subspace(f, a.ambient_dim, f.dot(rel.basis[:, : a.dim], a.basis))


def subspace_contains(a: Subspace, v) -> bool:
    return a.contains(v)


def intersect_all(spaces, field: FieldSpec, n: int) -> Subspace:
    out = Subspace.full(field, n)
    for s in spaces:
        out = out & s
    return out


def sum_all(spaces, field: FieldSpec, n: int) -> Subspace:
    vecs = [s.basis for s in spaces if s.dim]
    if not vecs:
        return Subspace.zero(field, n)
    return Subspace(field, n, np.concatenate(vecs))


def enumerate_subspaces(field: FieldSpec, n: int):
    """Every subspace of GF(p)^n, generated directly in RREF (finite fields only)."""
    from itertools import combinations

    yield Subspace.zero(field, n)
    for r in range(1, n + 1):
        for piv in combinations(range(n), r):
            # free positions: row i, column j > piv[i], j not a pivot
            slots = [(i, j) for i in range(r) for j in range(piv[i] + 1, n) if j not in piv]
            for values in field.all_vectors(len(slots)) if slots else [()]:
                basis = np.zeros((r, n), dtype=np.int64)
                for i, c in enumerate(piv):
                    basis[i, c] = 1
                for (i, j), x in zip(slots, values):
                    basis[i, j] = x
                yield Subspace(field, n, basis, _canonical=True)
