"""Finite-dimensional unital associative algebras given by structure constants.

``structure[i, j, k]`` is the coefficient of ``e_k`` in ``e_i * e_j``.  Ideals
are :class:`~hopfrad.linalg.Subspace` objects wrapped in :class:`IdealSubspace`
after the two-sided closure has been checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import FieldSpec
from .linalg import Subspace, kernel, sum_all

SUBSPACE_ENUM_MAX_ORDER = 81
SUBSPACE_ENUM_MAX_DIM = 4
ELEMENT_LIMIT = 3**8


class AlgebraError(Exception):
    """Base class for structural violations; carries a basis-index witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonAssociative(AlgebraError):
    pass


class BadUnit(AlgebraError):
    pass


class ParentMismatch(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class PNotProper(AlgebraError):
    pass


class TooLarge(Exception):
    pass


def format_vector(field: FieldSpec, labels, coeffs) -> str:
    terms = []
    for c, lab in zip(coeffs, labels):
        if c == 0:
            continue
        s = field.format(c)
        terms.append(lab if s == "1" else f"{s}*{lab}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True, eq=False)
class AlgebraDef:
    field: FieldSpec
    dim: int
    structure: np.ndarray
    unit: np.ndarray
    labels: tuple = dc_field(default=())

    def __repr__(self):
        return f"AlgebraDef({self.field}, dim={self.dim}, labels={list(self.labels)})"

    # arithmetic on coefficient vectors
    def mul(self, x, y) -> np.ndarray:
        return self.field.einsum("i,j,ijk->k", x, y, self.structure)

    def mul_many(self, xs, ys) -> np.ndarray:
        """All products ``xs[a] * ys[b]`` as an array of shape (len(xs), len(ys), dim)."""
        xs = np.atleast_2d(xs)
        ys = np.atleast_2d(ys)
        if xs.shape[0] == 0 or ys.shape[0] == 0:
            return self.field.zeros((xs.shape[0], ys.shape[0], self.dim))
        return self.field.einsum("ai,bj,ijk->abk", xs, ys, self.structure)

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x*y`` acting on column vectors."""
        return self.field.einsum("i,ijk->kj", x, self.structure)

    def right_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> y*x`` acting on column vectors."""
        return self.field.einsum("j,ijk->ki", x, self.structure)

    def left_matrices(self) -> np.ndarray:
        """``L[i]`` is the left multiplication matrix of ``e_i``."""
        return np.ascontiguousarray(np.transpose(self.structure, (0, 2, 1)))

    def right_matrices(self) -> np.ndarray:
        return np.ascontiguousarray(np.transpose(self.structure, (1, 2, 0)))

    def basis_vector(self, i: int) -> np.ndarray:
        return self.field.unit_vector(self.dim, i)

    # elements
    def element(self, coeffs) -> "Element":
        return Element(self, self.field.canon(coeffs))

    def zero(self) -> "Element":
        return Element(self, self.field.zeros(self.dim))

    def one(self) -> "Element":
        return Element(self, self.unit.copy())

    def gens(self) -> list:
        return [Element(self, self.basis_vector(i)) for i in range(self.dim)]

    def __getitem__(self, label: str) -> "Element":
        return Element(self, self.basis_vector(self.labels.index(label)))

    def format(self, coeffs) -> str:
        return format_vector(self.field, self.labels, coeffs)

    def is_commutative(self) -> bool:
        return bool(np.all(self.structure == np.transpose(self.structure, (1, 0, 2))))

    @property
    def size(self) -> int:
        return self.field.order**self.dim

    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def all_elements(self, limit: int = ELEMENT_LIMIT) -> np.ndarray:
        if not self.field.is_finite:
            raise TooLarge("element enumeration needs a finite field")
        if self.size > limit:
            raise TooLarge(f"|R| = {self.size} exceeds {limit}")
        return self.field.all_vectors(self.dim)


def verify_algebra(alg: AlgebraDef) -> None:
    """Raise on the first associativity or unit failure."""
    f, c, n = alg.field, alg.structure, alg.dim
    left = f.einsum("ijl,lkm->ijkm", c, c)
    right = f.einsum("jkl,ilm->ijkm", c, c)
    bad = np.argwhere(np.any(left != right, axis=3))
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise NonAssociative(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})", witness=(i, j, k))
    eye = f.identity(n)
    ul = f.einsum("i,ijk->jk", alg.unit, c)
    ur = f.einsum("j,ijk->ik", alg.unit, c)
    for i in range(n):
        if np.any(ul[i] != eye[i]) or np.any(ur[i] != eye[i]):
            raise BadUnit(f"unit fails on e{i}", witness=(i,))


def algebra_make(field: FieldSpec, dim: int, structure, unit, labels=None, *, check=True) -> AlgebraDef:
    structure = field.canon(structure)
    if structure.shape != (dim, dim, dim):
        raise ValueError(f"structure tensor must have shape {(dim, dim, dim)}, got {structure.shape}")
    unit = field.canon(unit).reshape(dim)
    labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(dim))
    if len(labels) != dim:
        raise ValueError("one label per basis element")
    alg = AlgebraDef(field, dim, structure, unit, labels)
    if check:
        verify_algebra(alg)
    return alg


class Element:
    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: AlgebraDef, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.parent is not self.parent:
            raise ParentMismatch("elements of different algebras")
        return True

    def __add__(self, other):
        self._same(other)
        return Element(self.parent, self.parent.field.canon(self.coeffs + other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return Element(self.parent, self.parent.field.canon(self.coeffs - other.coeffs))

    def __neg__(self):
        return Element(self.parent, self.parent.field.canon(-self.coeffs))

    def __mul__(self, other):
        if self._same(other):
            return elem_mul(self, other)
        f = self.parent.field
        return Element(self.parent, f.canon(self.coeffs * f.scalar(other)))

    def __rmul__(self, scalar):
        f = self.parent.field
        return Element(self.parent, f.canon(self.coeffs * f.scalar(scalar)))

    def __pow__(self, t: int):
        return elem_power(self, t)

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.parent is self.parent and bool(np.all(self.coeffs == other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.parent.field.format(x) for x in self.coeffs))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs != 0)

    def __repr__(self):
        return self.parent.format(self.coeffs)


def elem_mul(x: Element, y: Element) -> Element:
    if x.parent is not y.parent:
        raise ParentMismatch("elements of different algebras")
    return Element(x.parent, x.parent.mul(x.coeffs, y.coeffs))


def elem_power(x: Element, t: int) -> Element:
    if t < 0:
        raise ValueError("negative power")
    out = x.parent.one()
    for _ in range(t):
        out = elem_mul(out, x)
    return out


# -- ideals -------------------------------------------------------------


def span_products(alg: AlgebraDef, xs, ys) -> Subspace:
    prods = alg.mul_many(xs, ys)
    return Subspace(alg.field, alg.dim, prods.reshape(-1, alg.dim))


def is_two_sided(alg: AlgebraDef, space: Subspace) -> bool:
    if space.dim == 0:
        return True
    eye = alg.field.identity(alg.dim)
    return space.contains_all(alg.mul_many(eye, space.basis)) and space.contains_all(
        alg.mul_many(space.basis, eye)
    )


class IdealSubspace:
    """A two-sided ideal of ``parent``; closure is verified at construction."""

    __slots__ = ("parent", "space")

    def __init__(self, parent: AlgebraDef, space: Subspace, *, check=True):
        if space.ambient_dim != parent.dim or space.field != parent.field:
            raise ParentMismatch("subspace does not live in the parent algebra")
        if check and not is_two_sided(parent, space):
            raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
        self.parent = parent
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis

    def __eq__(self, other):
        if isinstance(other, IdealSubspace):
            return self.parent is other.parent and self.space == other.space
        if isinstance(other, Subspace):
            return self.space == other
        return NotImplemented

    def __hash__(self):
        return hash(self.space)

    def __le__(self, other):
        return self.space <= (other.space if isinstance(other, IdealSubspace) else other)

    def __repr__(self):
        gens = ", ".join(self.parent.format(row) for row in self.basis)
        return f"Ideal({gens or '0'})"

    def is_proper(self) -> bool:
        return not self.space.is_full()


def ideal_of(alg: AlgebraDef, vectors) -> IdealSubspace:
    return IdealSubspace(alg, Subspace(alg.field, alg.dim, vectors))


def ideal_generated(alg: AlgebraDef, gens) -> IdealSubspace:
    """Smallest two-sided ideal containing ``gens`` (elements or vectors)."""
    vecs = [g.coeffs if isinstance(g, Element) else g for g in gens]
    f = alg.field
    space = Subspace(f, alg.dim, np.array(vecs, dtype=f.dtype).reshape(-1, alg.dim) if vecs else f.zeros((0, alg.dim)))
    eye = f.identity(alg.dim)
    for _ in range(alg.dim + 1):
        s = space.basis
        rs = alg.mul_many(eye, s).reshape(-1, alg.dim)
        parts = [s, rs, alg.mul_many(s, eye).reshape(-1, alg.dim), alg.mul_many(eye, rs).reshape(-1, alg.dim)] if s.size else [s]
        new = Subspace(f, alg.dim, np.concatenate(parts))
        if new == space:
            return IdealSubspace(alg, space, check=False)
        space = new
    raise AssertionError("ideal closure did not stabilise within dim steps")


def ideal_product(i: IdealSubspace, j: IdealSubspace) -> IdealSubspace:
    if i.parent is not j.parent:
        raise ParentMismatch("ideals of different algebras")
    return IdealSubspace(i.parent, span_products(i.parent, i.basis, j.basis), check=False)


def ideal_power(i: IdealSubspace, t: int) -> IdealSubspace:
    out = IdealSubspace(i.parent, i.parent.whole(), check=False)
    for _ in range(t):
        out = ideal_product(out, i)
    return out


def ideal_nilpotency_index(i: IdealSubspace, cap: int | None = None):
    """Least ``t`` with ``I^t = 0`` (``t <= cap``), or ``None``."""
    cap = i.parent.dim + 1 if cap is None else cap
    power = i
    for t in range(1, cap + 1):
        if power.dim == 0:
            return t
        nxt = ideal_product(power, i)
        if nxt.space == power.space:
            return None
        power = nxt
    return None


def sum_ideals(alg: AlgebraDef, ideals) -> IdealSubspace:
    return IdealSubspace(alg, sum_all([i.space for i in ideals], alg.field, alg.dim), check=False)


# -- quotients, matrix and tensor algebras --------------------------------


class Quotient:
    """``A / I`` on the canonical complement (non-pivot coordinates of ``I``)."""

    def __init__(self, alg: AlgebraDef, ideal: IdealSubspace):
        if not ideal.is_proper():
            raise NotAnIdeal("quotient by the whole algebra")
        self.source = alg
        self.ideal = ideal
        f = alg.field
        self.coords = ideal.space.complement_coords()
        m = len(self.coords)
        basis = f.identity(alg.dim)[self.coords]
        prods = alg.mul_many(basis, basis)
        structure = self.project_vec(prods)
        labels = tuple(alg.labels[j] for j in self.coords)
        self.algebra = algebra_make(f, m, structure, self.project_vec(alg.unit), labels)

    def __iter__(self):
        return iter((self.algebra, self.project, self.lift))

    def project_vec(self, v) -> np.ndarray:
        return self.ideal.space.reduce(v)[..., self.coords]

    def lift_vec(self, w) -> np.ndarray:
        w = np.asarray(w)
        out = self.source.field.zeros(w.shape[:-1] + (self.source.dim,))
        out[..., self.coords] = w
        return out

    def project(self, x: Element) -> Element:
        return Element(self.algebra, self.project_vec(x.coeffs))

    def lift(self, y: Element) -> Element:
        return Element(self.source, self.lift_vec(y.coeffs))

    def project_space(self, space: Subspace) -> Subspace:
        return Subspace(self.source.field, self.algebra.dim, self.project_vec(space.basis) if space.dim else self.source.field.zeros((0, self.algebra.dim)))

    def preimage(self, space: Subspace) -> Subspace:
        """Full preimage in the source algebra of a subspace of the quotient."""
        lifted = self.lift_vec(space.basis) if space.dim else self.source.field.zeros((0, self.source.dim))
        return Subspace(self.source.field, self.source.dim, np.concatenate([lifted, self.ideal.basis]))


def quotient_algebra(alg: AlgebraDef, ideal: IdealSubspace) -> Quotient:
    return Quotient(alg, ideal)


def matrix_algebra(alg: AlgebraDef, n: int) -> AlgebraDef:
    """M_n(A) with basis ``a_i (x) e_rs`` at index ``(i*n + r)*n + s``."""
    if n < 1:
        raise ValueError("n >= 1")
    f = alg.field
    units = f.zeros((n, n, n, n, n, n))  # e_rs e_tu = delta_st e_ru
    one = f.scalar(1)
    for r in range(n):
        for s in range(n):
            for u in range(n):
                units[r, s, s, u, r, u] = one
    units = units.reshape(n * n, n * n, n * n)
    c = f.einsum("ijk,abc->iajbkc", alg.structure, units).reshape([alg.dim * n * n] * 3)
    eye = f.identity(n).reshape(-1)
    unit = f.einsum("i,a->ia", alg.unit, eye).reshape(-1)
    labels = [f"{lab}@E{r}{s}" for lab in alg.labels for r in range(n) for s in range(n)]
    return algebra_make(f, alg.dim * n * n, c, unit, labels)


def matrix_ideal(alg: AlgebraDef, n: int, ideal: Subspace) -> Subspace:
    """M_n(I) as a subspace of ``matrix_algebra(alg, n)``."""
    f = alg.field
    eye = f.identity(n * n)
    rows = [f.einsum("i,b->ib", v, e).reshape(-1) for v in ideal.basis for e in eye]
    return Subspace(f, alg.dim * n * n, np.array(rows, dtype=f.dtype).reshape(-1, alg.dim * n * n) if rows else f.zeros((0, alg.dim * n * n)))


def tensor_algebra(a: AlgebraDef, b: AlgebraDef) -> AlgebraDef:
    """A (x) B with basis ``a_i (x) b_j`` at index ``i*dim(B) + j``."""
    if a.field != b.field:
        raise ParentMismatch("field mismatch")
    f = a.field
    c = f.einsum("ikm,jln->ijklmn", a.structure, b.structure).reshape([a.dim * b.dim] * 3)
    unit = f.einsum("i,j->ij", a.unit, b.unit).reshape(-1)
    labels = [f"{x}#{y}" for x in a.labels for y in b.labels]
    return algebra_make(f, a.dim * b.dim, c, unit, labels)


def tensor_subspace(u: Subspace, v: Subspace) -> Subspace:
    f = u.field
    n = u.ambient_dim * v.ambient_dim
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(f, n)
    return Subspace(f, n, f.einsum("ai,bj->abij", u.basis, v.basis).reshape(-1, n))


def direct_product(*algs: AlgebraDef) -> AlgebraDef:
    """Block-diagonal product A_1 x ... x A_r."""
    f = algs[0].field
    n = sum(a.dim for a in algs)
    c = f.zeros((n, n, n))
    unit = f.zeros(n)
    labels = []
    off = 0
    for t, a in enumerate(algs):
        sl = slice(off, off + a.dim)
        c[sl, sl, sl] = a.structure
        unit[sl] = a.unit
        labels += [f"{lab}_{t}" for lab in a.labels]
        off += a.dim
    return algebra_make(f, n, c, unit, labels)


def unitization(alg: AlgebraDef, space: Subspace) -> AlgebraDef:
    """``k + I`` for a subalgebra ``I`` that need not contain a unit.

    Index 0 is the adjoined unit; index ``t + 1`` is the ``t``-th RREF basis
    vector of ``space``.
    """
    f = alg.field
    m = space.dim
    b = space.basis
    prods = alg.mul_many(b, b)  # in ambient coordinates, lie in space
    if not space.contains_all(prods.reshape(-1, alg.dim)):
        raise NotAnIdeal("subspace is not closed under multiplication")
    coords = space.coordinates(prods) if m else f.zeros((0, 0, 0))
    c = f.zeros((m + 1, m + 1, m + 1))
    one = f.scalar(1)
    c[0, 0, 0] = one
    for i in range(m):
        c[0, i + 1, i + 1] = one
        c[i + 1, 0, i + 1] = one
    if m:
        c[1:, 1:, 1:] = coords
    unit = f.unit_vector(m + 1, 0)
    labels = ["1+"] + [f"i{t}" for t in range(m)]
    return algebra_make(f, m + 1, c, unit, labels)


# -- enumeration oracles -------------------------------------------------------


def _check_subspace_enum(alg: AlgebraDef):
    if not alg.field.is_finite:
        raise TooLarge("enumeration needs a finite field")
    if alg.size > SUBSPACE_ENUM_MAX_ORDER or alg.dim > SUBSPACE_ENUM_MAX_DIM:
        raise TooLarge(f"subspace enumeration of {alg.field}^{alg.dim} exceeds the bound")


def enumerate_ideals(alg: AlgebraDef) -> list:
    """All two-sided ideals, by filtering every RREF subspace (tiny algebras only)."""
    from .linalg import enumerate_subspaces

    _check_subspace_enum(alg)
    out = [IdealSubspace(alg, s, check=False) for s in enumerate_subspaces(alg.field, alg.dim) if is_two_sided(alg, s)]
    return sorted(out, key=lambda i: i.space.key())


def principal_ideals(alg: AlgebraDef, limit: int = ELEMENT_LIMIT) -> dict:
    """Map from ideal to one generator, over every element (finite fields)."""
    elems = alg.all_elements(limit)
    f = alg.field
    eye = f.identity(alg.dim)
    seen = {}
    # scalar multiples generate the same ideal: keep elements whose first nonzero is 1
    for v in elems[1:]:
        nz = np.flatnonzero(v)
        if v[nz[0]] != 1:
            continue
        prods = alg.mul_many(eye, alg.mul_many(v, eye).reshape(-1, alg.dim)).reshape(-1, alg.dim)
        ideal = Subspace(f, alg.dim, prods)
        seen.setdefault(ideal, v)
    return seen


def enumerate_ideals_by_generators(alg: AlgebraDef, limit: int = ELEMENT_LIMIT) -> list:
    """All ideals as sums of principal ideals (every ideal is one)."""
    principals = list(principal_ideals(alg, limit))
    found = {alg.zero_space()}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for p in principals:
                t = s + p
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted((IdealSubspace(alg, s, check=False) for s in found), key=lambda i: i.space.key())


def _forms_killing(space: Subspace) -> np.ndarray:
    return space.annihilator().reshape(-1, space.ambient_dim)


def _coset_representatives(alg: AlgebraDef, p_space: Subspace, limit: int) -> np.ndarray:
    """One nonzero representative per line of ``R/P`` (leading coefficient 1).

    Scaling ``a`` does not change any of the element criteria, so lines suffice.
    """
    f = alg.field
    coords = p_space.complement_coords()
    if f.order ** len(coords) > limit:
        raise TooLarge(f"|R/P| = {f.order ** len(coords)} exceeds {limit}")
    vals = f.all_vectors(len(coords))[1:]
    lead = vals[np.arange(len(vals)), np.argmax(vals != 0, axis=1)]
    vals = vals[lead == 1]
    reps = f.zeros((vals.shape[0], alg.dim))
    reps[:, coords] = vals
    return reps


def _element_prime_test(alg: AlgebraDef, p_space: Subspace, left_maps, right_maps, semiprime: bool, limit: int):
    """Shared element criterion.

    ``left_maps(a)`` returns the list of vectors ``u`` standing for the factor
    on the left (``a`` itself, or ``h.a``), and ``right_maps`` the list of
    matrices ``T`` with the right factor ``T b``.  For each coset
    representative ``a`` the set ``{b : u e_j (T b) in P}`` is a subspace.
    Returns ``(verdict, witness)``.
    """
    f = alg.field
    forms = _forms_killing(p_space)
    eye = f.identity(alg.dim)
    for a in _coset_representatives(alg, p_space, limit):
        us = np.atleast_2d(left_maps(a))
        mids = alg.mul_many(us, eye).reshape(-1, alg.dim)  # u e_j
        lmats = f.einsum("ai,ijk->akj", mids, alg.structure)  # L_{u e_j}
        rows = [f.dot(forms, f.dot(lm, t)) for lm in lmats for t in right_maps]
        kb = kernel(f, np.concatenate(rows)) if rows and forms.size else Subspace.full(f, alg.dim)
        if semiprime:
            if kb.contains(a):
                return False, a
        else:
            if not kb.issubset(p_space):
                bad = next(v for v in kb.basis if not p_space.contains(v))
                return False, (a, bad)
    return True, None


def is_prime_ideal(alg: AlgebraDef, p: IdealSubspace, limit: int = ELEMENT_LIMIT) -> bool:
    """``aRb in P => a in P or b in P``, checked over every coset representative."""
    return prime_witness(alg, p, limit)[0]


def prime_witness(alg: AlgebraDef, p: IdealSubspace, limit: int = ELEMENT_LIMIT):
    if not p.is_proper():
        raise PNotProper("prime ideals are proper")
    if not alg.field.is_finite:
        raise TooLarge("element criterion needs a finite field")
    eye = alg.field.identity(alg.dim)
    return _element_prime_test(alg, p.space, lambda a: a, [eye], False, limit)


def is_semiprime_ideal(alg: AlgebraDef, p: IdealSubspace, limit: int = ELEMENT_LIMIT) -> bool:
    return semiprime_witness(alg, p, limit)[0]


def semiprime_witness(alg: AlgebraDef, p: IdealSubspace, limit: int = ELEMENT_LIMIT):
    if not p.is_proper():
        raise PNotProper("semiprime ideals are proper")
    if not alg.field.is_finite:
        raise TooLarge("element criterion needs a finite field")
    eye = alg.field.identity(alg.dim)
    return _element_prime_test(alg, p.space, lambda a: a, [eye], True, limit)


def is_prime_by_ideals(alg: AlgebraDef, p: IdealSubspace, ideals) -> bool:
    """Ideal-pair criterion ``IJ in P => I in P or J in P`` over a given ideal list."""
    if not p.is_proper():
        raise PNotProper("prime ideals are proper")
    for i in ideals:
        if i.space <= p.space:
            continue
        for j in ideals:
            if j.space <= p.space:
                continue
            if ideal_product(i, j).space <= p.space:
                return False
    return True
