"""H-ideals and the H-radicals of a (twisted) H-module algebra.

Everything here is exact.  Routines that enumerate elements require a finite
field and respect the stated size bounds; they raise :class:`TooLarge`
otherwise.
"""

from __future__ import annotations

import numpy as np

from .action import ActionBundle, CrossedProduct, quotient_bundle
from .algebra import (
    ELEMENT_LIMIT,
    AlgebraDef,
    AlgebraError,
    IdealSubspace,
    NotAnIdeal,
    PNotProper,
    TooLarge,
    _element_prime_test,
    ideal_product,
    is_two_sided,
)
from .hopf import group_table_if_dual_group_algebra
from .linalg import Subspace, intersect_all, kernel, solve
from .radical import radical

W_H_MAX_R = 256
W_H_MAX_H = 16
R_HN_MAX_R = 256


class StabilityAssertionFailure(AssertionError):
    pass


class FormulaMismatch(AssertionError):
    pass


class CrossCheckFailure(AssertionError):
    pass


class NotASubspace(AssertionError):
    pass


class NotAGrading(AlgebraError):
    pass


class HIdealSubspace(IdealSubspace):
    """A two-sided ideal stable under the action of H."""

    __slots__ = ("bundle",)

    def __init__(self, bundle: ActionBundle, space: Subspace, *, check=True):
        super().__init__(bundle.target, space, check=check)
        if check and not bundle.h_stable(space):
            raise NotAnIdeal("ideal is not H-stable")
        self.bundle = bundle

    @property
    def ideal(self) -> IdealSubspace:
        return IdealSubspace(self.parent, self.space, check=False)

    def __repr__(self):
        return "H" + super().__repr__()


def _space(x) -> Subspace:
    return x.space if isinstance(x, IdealSubspace) else x


def _elements(alg: AlgebraDef, space: Subspace, limit: int) -> np.ndarray:
    if not alg.field.is_finite:
        raise TooLarge("element enumeration needs a finite field")
    if alg.field.order**space.dim > limit:
        raise TooLarge(f"{alg.field.order ** space.dim} elements exceed {limit}")
    return space.elements()


# -- (I : H) and generated H-ideals ---------------------------------------------


def colon_H(b: ActionBundle, ideal) -> HIdealSubspace:
    """``(I : H) = {x : h.x in I for all h}``, the largest H-ideal inside ``I``."""
    space = _space(ideal)
    f, n = b.field, b.target.dim
    if space.is_full():
        out = space
    else:
        forms = space.annihilator()
        cond = f.einsum("fk,ikj->ifj", forms, b.act_matrices).reshape(-1, n)
        out = kernel(f, cond)
    if not is_two_sided(b.target, out) or not b.h_stable(out):
        raise StabilityAssertionFailure("(I:H) is not an H-stable two-sided ideal")
    return HIdealSubspace(b, out, check=False)


def _orbit_space(b: ActionBundle, space: Subspace) -> Subspace:
    """``H . S`` for a subspace ``S``."""
    if space.dim == 0:
        return space
    rows = b.field.einsum("aj,ijk->aik", space.basis, b.act).reshape(-1, b.target.dim)
    return Subspace(b.field, b.target.dim, rows)


def _two_sided_hull(alg: AlgebraDef, space: Subspace, carrier: Subspace | None = None) -> Subspace:
    """``S + CS + SC + CSC`` with ``C`` the carrier (default: all of R)."""
    if space.dim == 0:
        return space
    f = alg.field
    c = alg.field.identity(alg.dim) if carrier is None else carrier.basis
    s = space.basis
    if c.shape[0] == 0:
        return space
    cs = alg.mul_many(c, s).reshape(-1, alg.dim)
    parts = [s, cs, alg.mul_many(s, c).reshape(-1, alg.dim), alg.mul_many(cs, c).reshape(-1, alg.dim)]
    return Subspace(f, alg.dim, np.concatenate(parts))


def h_ideal_closure(b: ActionBundle, space: Subspace, carrier: Subspace | None = None) -> Subspace:
    """Smallest subspace containing ``space`` closed under H and two-sided products with ``C``."""
    cur = space
    for _ in range(b.target.dim + 2):
        nxt = _two_sided_hull(b.target, cur + _orbit_space(b, cur), carrier)
        if nxt == cur:
            return cur
        cur = nxt
    raise AssertionError("H-ideal closure did not stabilise")


def h_ideal_generated(b: ActionBundle, gens, carrier: Subspace | None = None) -> HIdealSubspace:
    """``(E) = (H.E) + C(H.E) + (H.E)C + C(H.E)C``, checked against a fixed-point closure.

    ``carrier`` is an H-ideal ``C`` when the H-ideal of ``C`` (not of R) is wanted.
    """
    f, n = b.field, b.target.dim
    vecs = [g.coeffs if hasattr(g, "coeffs") else np.asarray(g) for g in gens]
    e = Subspace(f, n, np.array(vecs, dtype=f.dtype).reshape(-1, n)) if vecs else Subspace.zero(f, n)
    formula = _two_sided_hull(b.target, _orbit_space(b, e), carrier)
    closure = h_ideal_closure(b, e, carrier)
    if formula != closure:
        raise FormulaMismatch("closed formula for the generated H-ideal disagrees with the closure")
    return HIdealSubspace(b, formula, check=carrier is None)


# -- enumeration and H-primes --------------------------------------------------------


def principal_h_ideals(b: ActionBundle, limit: int = ELEMENT_LIMIT) -> dict:
    """Map each principal H-ideal to one generator."""
    R = b.target
    f = R.field
    seen = {}
    for v in _elements(R, R.whole(), limit)[1:]:
        if v[np.flatnonzero(v)[0]] != 1:
            continue
        seen.setdefault(_two_sided_hull(R, _orbit_space(b, Subspace(f, R.dim, v))), v)
    return seen


def enumerate_h_ideals(b: ActionBundle, limit: int = ELEMENT_LIMIT) -> list:
    """All H-ideals, as sums of principal H-ideals."""
    principals = list(principal_h_ideals(b, limit))
    found = {b.target.zero_space()}
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
    return sorted((HIdealSubspace(b, s, check=False) for s in found), key=lambda i: i.space.key())


def _h_element_test(b: ActionBundle, p_space: Subspace, semiprime: bool, limit: int):
    if p_space.is_full():
        raise PNotProper("H-prime ideals are proper")
    if not b.field.is_finite:
        raise TooLarge("element criterion needs a finite field")
    if not b.h_stable(p_space):
        raise NotAnIdeal("P is not H-stable")
    return _element_prime_test(b.target, p_space, b.orbit_span, list(b.act_matrices), semiprime, limit)


def h_prime_witness(b: ActionBundle, p, limit: int = ELEMENT_LIMIT):
    """``(H.a)R(H.b) in P => a in P or b in P``; returns ``(verdict, witness)``."""
    return _h_element_test(b, _space(p), False, limit)


def h_semiprime_witness(b: ActionBundle, p, limit: int = ELEMENT_LIMIT):
    return _h_element_test(b, _space(p), True, limit)


def is_h_prime_by_ideals(b: ActionBundle, p, h_ideals) -> bool:
    space = _space(p)
    if space.is_full():
        raise PNotProper("H-prime ideals are proper")
    outside = [i for i in h_ideals if not i.space <= space]
    return not any(ideal_product(i, j).space <= space for i in outside for j in outside)


def is_h_prime_ideal(b: ActionBundle, p, limit: int = ELEMENT_LIMIT, h_ideals=None) -> bool:
    """Element criterion; when ``h_ideals`` is given the H-ideal-pair criterion must agree."""
    verdict = h_prime_witness(b, p, limit)[0]
    if h_ideals is not None and is_h_prime_by_ideals(b, p, h_ideals) != verdict:
        raise CrossCheckFailure("element and H-ideal-pair criteria disagree")
    return verdict


def is_h_semiprime_ideal(b: ActionBundle, p, limit: int = ELEMENT_LIMIT) -> bool:
    return h_semiprime_witness(b, p, limit)[0]


def is_h_semiprime(b: ActionBundle, limit: int = ELEMENT_LIMIT) -> bool:
    """``(H.a)R(H.a) = 0 => a = 0``."""
    return is_h_semiprime_ideal(b, b.target.zero_space(), limit)


def h_spec(b: ActionBundle, limit: int = ELEMENT_LIMIT, cross_check: bool = True) -> list:
    ideals = enumerate_h_ideals(b, limit)
    pool = ideals if cross_check else None
    return [i for i in ideals if i.is_proper() and is_h_prime_ideal(b, i, limit, pool)]


def h_spec_intersection(b: ActionBundle, limit: int = ELEMENT_LIMIT) -> HIdealSubspace:
    primes = h_spec(b, limit)
    return HIdealSubspace(b, intersect_all([p.space for p in primes], b.field, b.target.dim), check=False)


# -- Baer / Jacobson H-radicals ------------------------------------------------------


def r_bH(b: ActionBundle) -> HIdealSubspace:
    return colon_H(b, radical(b.target))


r_jH = r_bH  # r_j = r_b for finite-dimensional algebras


def _bundle(x) -> ActionBundle:
    return x.bundle if isinstance(x, CrossedProduct) else x


def r_Hb(cp: CrossedProduct) -> HIdealSubspace:
    """``(r_b(R) : H)``, cross-checked against ``r_b(R #_sigma H) cap R``."""
    b = cp.bundle
    formula = r_bH(b)
    other = cp.restrict(radical(cp.algebra))
    if formula.space != other:
        raise CrossCheckFailure("(r_b(R):H) != r_b(R#H) cap R")
    return formula


def r_Hj_formula(cp: CrossedProduct) -> IdealSubspace:
    """Literal ``r_j(R #_sigma H) cap R``."""
    return IdealSubspace(cp.R, cp.restrict(radical(cp.algebra)), check=False)


def r_Hj(cp: CrossedProduct) -> HIdealSubspace:
    """``r_j(R #_sigma H) cap R``, asserted equal to ``(r_j(R) : H)``."""
    lit = r_Hj_formula(cp)
    colon = r_jH(cp.bundle)
    if lit.space != colon.space:
        raise CrossCheckFailure("r_Hj != r_jH")
    return HIdealSubspace(cp.bundle, lit.space, check=False)


# -- W_H: the H-m-sequence graph -------------------------------------------------------


def m_sequence_successors(b: ActionBundle, x: np.ndarray, elems: np.ndarray | None = None) -> np.ndarray:
    """All ``(h.x) r (h'.x)`` for h, h' in H and r in R, as distinct rows."""
    R, f = b.target, b.field
    orbit = Subspace(f, R.dim, b.orbit_span(x))
    vs = orbit.elements()
    elems = R.all_elements() if elems is None else elems
    # u r v for all u, v in the orbit space and all r
    ur = R.mul_many(vs, elems).reshape(-1, R.dim)
    out = R.mul_many(ur, vs).reshape(-1, R.dim)
    return np.unique(out, axis=0)


def w_H_oracle(b: ActionBundle) -> HIdealSubspace:
    """H-m-nilpotent elements: nodes with no infinite walk avoiding 0."""
    R, f = b.target, b.field
    if not f.is_finite:
        raise TooLarge("W_H needs a finite field")
    if R.size > W_H_MAX_R or b.hopf.algebra.size > W_H_MAX_H:
        raise TooLarge(f"|R| = {R.size}, |H| = {b.hopf.algebra.size} exceed the W_H bound")
    elems = R.all_elements()  # row i has code i
    size = len(elems)
    succ = np.zeros((size, size), dtype=bool)
    cache = {}
    for code in range(1, size):
        x = elems[code]
        orbit = Subspace(f, R.dim, b.orbit_span(x))
        if orbit not in cache:
            cache[orbit] = f.encode(m_sequence_successors(b, x, elems))
        succ[code, cache[orbit]] = True
    alive = np.ones(size, dtype=bool)
    alive[0] = False
    while True:
        nxt = alive & (succ[:, alive].any(axis=1))
        if np.array_equal(nxt, alive):
            break
        alive = nxt
    nil = elems[~alive]
    space = Subspace(f, R.dim, nil)
    if f.order**space.dim != len(nil):
        raise NotASubspace("the H-m-nilpotent elements do not form a subspace")
    return HIdealSubspace(b, space)


# -- H-regularity and r_Hn ----------------------------------------------------------


def _regular_span(b: ActionBundle, a, carrier: Subspace | None) -> Subspace:
    R, f = b.target, b.field
    orbit = b.orbit_span(a)
    mids = f.identity(R.dim) if carrier is None else carrier.basis
    if mids.shape[0] == 0:
        return Subspace.zero(f, R.dim)
    left = R.mul_many(orbit, mids).reshape(-1, R.dim)
    return Subspace(f, R.dim, R.mul_many(left, orbit).reshape(-1, R.dim))


def is_h_regular_element(b: ActionBundle, a, carrier: Subspace | None = None) -> bool:
    """``a in (H.a) C (H.a)``, with ``C = R`` by default."""
    a = a.coeffs if hasattr(a, "coeffs") else np.asarray(a)
    return _regular_span(b, a, carrier).contains(a)


def _regular_mask(b: ActionBundle, elems: np.ndarray, carrier: Subspace | None) -> np.ndarray:
    return np.array([is_h_regular_element(b, a, carrier) for a in elems], dtype=bool)


def is_h_regular(b: ActionBundle, limit: int = ELEMENT_LIMIT):
    """Whether every element of R is H-regular; returns ``(verdict, witness)``."""
    for a in _elements(b.target, b.target.whole(), limit):
        if not is_h_regular_element(b, a):
            return False, a
    return True, None


def r_Hn(b: ActionBundle, carrier=None) -> HIdealSubspace:
    """``{a : every element of the H-ideal (a) is H-regular}``.

    With ``carrier`` (an H-ideal ``I``) the computation is done inside ``I``:
    generated H-ideals and regularity both refer to ``I``.  The result is
    returned in coordinates of R.
    """
    R, f = b.target, b.field
    c_space = None if carrier is None else _space(carrier)
    if c_space is not None and not (is_two_sided(R, c_space) and b.h_stable(c_space)):
        raise NotAnIdeal("carrier must be an H-ideal")
    universe = R.whole() if c_space is None else c_space
    if not f.is_finite or f.order**universe.dim > R_HN_MAX_R:
        raise TooLarge("r_Hn enumerates elements; needs a finite field and at most 256 elements")
    elems = universe.elements()
    regular = dict(zip(f.encode(elems).tolist(), _regular_mask(b, elems, c_space)))

    def all_regular(space: Subspace) -> bool:
        return all(regular[c] for c in f.encode(space.elements()).tolist())

    verdicts = {}
    members = []
    for a in elems:
        gen = _two_sided_hull(R, _orbit_space(b, Subspace(f, R.dim, a)), c_space)
        if gen not in verdicts:
            verdicts[gen] = all_regular(gen)
        if verdicts[gen]:
            members.append(a)
    space = Subspace(f, R.dim, np.array(members, dtype=f.dtype).reshape(-1, R.dim))
    if f.order**space.dim != len(members):
        raise NotASubspace("r_Hn is not a subspace")
    if not (is_two_sided(R, space) and b.h_stable(space)):
        raise StabilityAssertionFailure("r_Hn is not an H-ideal")
    return HIdealSubspace(b, space, check=False)


def r_Hn_of_quotient(b: ActionBundle) -> Subspace:
    """``r_Hn(R / r_Hn(R))`` in quotient coordinates (the zero space when R/r_Hn = 0)."""
    rn = r_Hn(b)
    if rn.space.is_full():
        return Subspace.zero(b.field, 0)
    qb, _ = quotient_bundle(b, rn)
    return r_Hn(qb).space


# -- gradings from (kG)* --------------------------------------------------------------


class Grading:
    def __init__(self, bundle: ActionBundle, table, components):
        self.bundle = bundle
        self.table = table
        self.components = components  # indexed like the dual basis p_g

    def __len__(self):
        return len(self.components)

    def __getitem__(self, g):
        return self.components[g]

    def __repr__(self):
        return f"Grading(dims={[c.dim for c in self.components]})"


def grading_from_dual(b: ActionBundle) -> Grading:
    """``R_g = p_g . R`` for an action of ``(kG)*``."""
    table = group_table_if_dual_group_algebra(b.hopf)
    if table is None:
        raise NotAGrading("Hopf algebra is not a dual group algebra on its basis")
    R, f = b.target, b.field
    comps = [Subspace(f, R.dim, b.act[g]) for g in range(b.hopf.dim)]
    if sum(c.dim for c in comps) != R.dim or not Subspace(f, R.dim, np.concatenate([c.basis for c in comps])).is_full():
        raise NotAGrading("components do not form a direct sum decomposition")
    for g, cg in enumerate(comps):
        for h, ch in enumerate(comps):
            if cg.dim and ch.dim and not comps[table[g][h]].contains_all(R.mul_many(cg.basis, ch.basis)):
                raise NotAGrading(f"R_{g} R_{h} not inside R_{table[g][h]}", witness=(g, h))
    return Grading(b, table, comps)


def is_gr_regular(grading: Grading, limit: int = ELEMENT_LIMIT):
    """Every homogeneous ``a`` has some ``b`` with ``a = a b a``; ``(verdict, witness)``.

    For fixed ``a`` the condition is linear in ``b``.
    """
    b = grading.bundle
    R, f = b.target, b.field
    for comp in grading.components:
        for a in _elements(R, comp, limit)[1:]:
            # matrix of y -> a y a
            m = f.dot(R.left_matrix(a), R.right_matrix(a))
            if solve(f, m, a) is None:
                return False, a
    return True, None


def hereditary_pairs(b: ActionBundle, limit: int = ELEMENT_LIMIT):
    """``(I, r_Hn(I), r_Hn(R) cap I)`` for every H-ideal ``I``."""
    whole = r_Hn(b)
    out = []
    for ideal in enumerate_h_ideals(b, limit):
        inside = r_Hn(b, ideal)
        out.append((ideal, inside.space, whole.space & ideal.space))
    return out
