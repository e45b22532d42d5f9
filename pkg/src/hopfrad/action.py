"""Weak actions, cocycles, crossed products and the ideal correspondence.

Tensors: ``act[i, j, k]`` is the coefficient of ``e_k`` in ``h_i . e_j`` and
``sigma[i, j, k]`` that of ``e_k`` in ``sigma(h_i, h_j)``.  A missing cocycle
means the trivial one ``eps (x) eps (x) 1``.

Crossed product basis: ``r_i # h_a`` at index ``i*dim(H) + a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import (
    AlgebraDef,
    AlgebraError,
    Element,
    IdealSubspace,
    NotAnIdeal,
    Quotient,
    algebra_make,
    is_two_sided,
    tensor_subspace,
)
from .hopf import HopfDef, dual_hopf
from .linalg import Subspace, kernel, solve


class ActionError(AlgebraError):
    pass


class MeasuringViolation(ActionError):
    pass


class NotConvolutionInvertible(ActionError):
    pass


class CocycleViolation(ActionError):
    pass


class TwistedModuleViolation(ActionError):
    pass


class NoPreimage(AssertionError):
    pass


def trivial_sigma(hopf: HopfDef, target: AlgebraDef) -> np.ndarray:
    return hopf.field.einsum("i,j,k->ijk", hopf.counit, hopf.counit, target.unit)


def trivial_act(hopf: HopfDef, target: AlgebraDef) -> np.ndarray:
    return hopf.field.einsum("i,jk->ijk", hopf.counit, target.field.identity(target.dim))


def convolution_inverse(hopf: HopfDef, target: AlgebraDef, sigma) -> np.ndarray:
    """Solve ``sum sigma(h1,k1) tau(h2,k2) = eps(h)eps(k)1`` for ``tau``.

    The one-sided solution is then checked from the other side as well.
    """
    f, m, n = hopf.field, hopf.dim, target.dim
    d, c = hopf.delta, target.structure
    # coefficient of tau[a', b', r] in component s of equation (i, j)
    big = f.einsum("iax,jby,abq,qrs->ijsxyr", d, d, sigma, c).reshape(m * m * n, m * m * n)
    rhs = f.einsum("i,j,s->ijs", hopf.counit, hopf.counit, target.unit).reshape(-1)
    tau = solve(f, big, rhs)
    if tau is None:
        raise NotConvolutionInvertible("sigma has no right convolution inverse")
    tau = tau.reshape(m, m, n)
    left = f.einsum("iax,jby,abq,xyr,qrs->ijs", d, d, tau, sigma, c)
    if np.any(left != rhs.reshape(m, m, n)):
        raise NotConvolutionInvertible("right inverse of sigma is not a left inverse")
    return tau


@dataclass(frozen=True, eq=False)
class ActionBundle:
    hopf: HopfDef
    target: AlgebraDef
    act: np.ndarray
    sigma: np.ndarray | None = None
    sigma_inv: np.ndarray | None = None
    inner_unit: np.ndarray | None = None  # set only by inner_action

    @property
    def field(self):
        return self.target.field

    @cached_property
    def sigma_full(self) -> np.ndarray:
        return trivial_sigma(self.hopf, self.target) if self.sigma is None else self.sigma

    @cached_property
    def sigma_inv_full(self) -> np.ndarray:
        return trivial_sigma(self.hopf, self.target) if self.sigma_inv is None else self.sigma_inv

    @cached_property
    def act_matrices(self) -> np.ndarray:
        """``T[i]`` is the matrix of ``r -> h_i . r``."""
        m = np.ascontiguousarray(np.transpose(self.act, (0, 2, 1)))
        m.setflags(write=False)
        return m

    def has_trivial_sigma(self) -> bool:
        return self.sigma is None or bool(np.all(self.sigma == trivial_sigma(self.hopf, self.target)))

    def is_trivial_action(self) -> bool:
        return bool(np.all(self.act == trivial_act(self.hopf, self.target)))

    def apply(self, h, r) -> np.ndarray:
        return self.field.einsum("i,j,ijk->k", h, r, self.act)

    def orbit_span(self, r) -> np.ndarray:
        """Rows ``h_i . r`` for every basis ``h_i``: they span ``H . r``."""
        return self.field.einsum("j,ijk->ik", r, self.act)

    def h_stable(self, space: Subspace) -> bool:
        if space.dim == 0:
            return True
        images = self.field.einsum("aj,ijk->aik", space.basis, self.act)
        return space.contains_all(images.reshape(-1, self.target.dim))

    def __repr__(self):
        return f"ActionBundle(H={self.hopf!r}, R={self.target!r}, sigma={'trivial' if self.has_trivial_sigma() else 'twisted'})"


def action_apply(b: ActionBundle, h: Element, r: Element) -> Element:
    from .algebra import ParentMismatch

    if h.parent is not b.hopf.algebra or r.parent is not b.target:
        raise ParentMismatch("element does not belong to the bundle")
    return Element(b.target, b.apply(h.coeffs, r.coeffs))


def verify_action(b: ActionBundle) -> None:
    f, H, R = b.field, b.hopf, b.target
    m, n = H.dim, R.dim
    t, c, d, cH = b.act, R.structure, H.delta, H.algebra.structure
    s, tau = b.sigma_full, b.sigma_inv_full
    # measuring
    lhs = f.einsum("abm,imk->iabk", c, t)
    rhs = f.einsum("ijk,jap,kbq,pqr->iabr", d, t, t, c)
    bad = np.argwhere(np.any(lhs != rhs, axis=3))
    if bad.size:
        i, a, bb = (int(v) for v in bad[0])
        raise MeasuringViolation(f"h{i}.(e{a} e{bb}) != sum (h1.e{a})(h2.e{bb})", witness=(i, a, bb))
    ones = f.einsum("j,ijk->ik", R.unit, t)
    want = f.einsum("i,k->ik", H.counit, R.unit)
    bad = np.argwhere(np.any(ones != want, axis=1))
    if bad.size:
        i = int(bad[0][0])
        raise MeasuringViolation(f"h{i}.1 != eps(h{i})1", witness=(i, None, None))
    unit_act = f.einsum("i,ijk->jk", H.algebra.unit, t)
    bad = np.argwhere(np.any(unit_act != f.identity(n), axis=1))
    if bad.size:
        j = int(bad[0][0])
        raise MeasuringViolation(f"1.e{j} != e{j}", witness=(None, j, None))
    # normality of sigma
    u = H.algebra.unit
    left = f.einsum("j,ijk->ik", u, s)
    right = f.einsum("i,ijk->jk", u, s)
    for i in range(m):
        if np.any(left[i] != want[i]) or np.any(right[i] != want[i]):
            raise CocycleViolation(f"sigma not normal at h{i}", witness=(i, None, None))
    # cocycle: sum (h1.sigma(k1,m1)) sigma(h2, k2 m2) = sum sigma(h1,k1) sigma(h2 k2, m)
    inner = f.einsum("kce,lfg,cfx,egz->klxz", d, d, s, cH)  # sigma(k1,m1) and k2 m2
    acted = f.einsum("hab,klxz,axy->hklbzy", d, inner, t)
    lhs = f.einsum("hklbzy,bzw,ywo->hklo", acted, s, c)
    first = f.einsum("hab,kce,acx,bez->hkxz", d, d, s, cH)
    rhs = f.einsum("hkxz,zlw,xwo->hklo", first, s, c)
    bad = np.argwhere(np.any(lhs != rhs, axis=3))
    if bad.size:
        h, k, l_ = (int(v) for v in bad[0])
        raise CocycleViolation(f"cocycle identity fails at (h{h}, h{k}, h{l_})", witness=(h, k, l_))
    # twisted module: h.(k.r) = sum sigma(h1,k1) ((h2 k2).r) sigma^-1(h3,k3)
    d2 = H.delta2()
    lhs = f.einsum("krx,hxo->hkro", t, t)
    pre = f.einsum("habc,kefg,aeq,bfz->hkqzcg", d2, d2, s, cH)
    mid = f.einsum("hkqzcg,zry->hkqycgr", pre, t)
    mid = f.einsum("hkqycgr,qyw->hkwcgr", mid, c)
    rhs = f.einsum("hkwcgr,cgv,wvo->hkro", mid, tau, c)
    bad = np.argwhere(np.any(lhs != rhs, axis=3))
    if bad.size:
        h, k, r = (int(v) for v in bad[0])
        raise TwistedModuleViolation(f"h{h}.(h{k}.e{r}) differs from the twisted product", witness=(h, k, r))


def action_make(hopf: HopfDef, target: AlgebraDef, act, sigma=None, *, check=True, inner_unit=None) -> ActionBundle:
    f = target.field
    if f != hopf.field:
        raise ActionError("field mismatch between H and R")
    m, n = hopf.dim, target.dim
    act = f.canon(act)
    if act.shape != (m, n, n):
        raise ValueError(f"action tensor must have shape {(m, n, n)}")
    sigma_inv = None
    if sigma is not None:
        sigma = f.canon(sigma)
        if sigma.shape != (m, m, n):
            raise ValueError(f"cocycle tensor must have shape {(m, m, n)}")
        if np.all(sigma == trivial_sigma(hopf, target)):
            sigma = None
        else:
            sigma_inv = convolution_inverse(hopf, target, sigma)
    b = ActionBundle(hopf, target, act, sigma, sigma_inv, inner_unit)
    if check:
        verify_action(b)
    return b


def trivial_action(hopf: HopfDef, target: AlgebraDef) -> ActionBundle:
    return action_make(hopf, target, trivial_act(hopf, target))


def inner_action(hopf: HopfDef, target: AlgebraDef, u) -> ActionBundle:
    """``h . r = sum u(h1) r u^-1(h2)`` for a convolution-invertible ``u : H -> R``.

    ``u`` is a ``dim H x dim R`` array; row ``i`` is ``u(h_i)``.
    """
    f, m, n = hopf.field, hopf.dim, target.dim
    u = f.canon(u)
    # solve sum u(h1) v(h2) = eps(h) 1 for v
    big = f.einsum("iax,aq,qrs->isxr", hopf.delta, u, target.structure).reshape(m * n, m * n)
    rhs = f.einsum("i,s->is", hopf.counit, target.unit).reshape(-1)
    v = solve(f, big, rhs)
    if v is None:
        raise NotConvolutionInvertible("u has no convolution inverse")
    v = v.reshape(m, n)
    check = f.einsum("iax,aq,xr,qrs->is", hopf.delta, v, u, target.structure)
    if np.any(check != rhs.reshape(m, n)):
        raise NotConvolutionInvertible("convolution inverse of u is one-sided")
    act = f.einsum("iax,aq,qjw,xr,wro->ijo", hopf.delta, u, target.structure, v, target.structure)
    return action_make(hopf, target, act, inner_unit=u)


# -- crossed products ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CrossedProduct:
    bundle: ActionBundle
    algebra: AlgebraDef

    @property
    def field(self):
        return self.algebra.field

    @property
    def R(self) -> AlgebraDef:
        return self.bundle.target

    @property
    def H(self) -> HopfDef:
        return self.bundle.hopf

    def embed_vec(self, r) -> np.ndarray:
        """``r # 1`` (works on stacks of vectors)."""
        return self.field.einsum("...i,a->...ia", r, self.H.algebra.unit).reshape(np.shape(r)[:-1] + (self.algebra.dim,))

    def section_vec(self, h) -> np.ndarray:
        """``1 # h``."""
        return self.field.einsum("i,...a->...ia", self.R.unit, h).reshape(np.shape(h)[:-1] + (self.algebra.dim,))

    def embed_R(self, r: Element) -> Element:
        return Element(self.algebra, self.embed_vec(r.coeffs))

    def section_H(self, h: Element) -> Element:
        return Element(self.algebra, self.section_vec(h.coeffs))

    @cached_property
    def image_of_R(self) -> Subspace:
        return Subspace(self.field, self.algebra.dim, self.embed_vec(self.field.identity(self.R.dim)))

    def extend(self, space: Subspace) -> Subspace:
        """``I #_sigma H`` for a subspace ``I`` of ``R``."""
        return tensor_subspace(space, Subspace.full(self.field, self.H.dim))

    def restrict(self, space: Subspace) -> Subspace:
        """``J cap R`` pulled back to coordinates of ``R``."""
        inter = space & self.image_of_R
        if inter.dim == 0:
            return Subspace.zero(self.field, self.R.dim)
        m = self.H.dim
        # r # 1 has coordinates r_i * unit_H[a]; read r off a column where unit_H is nonzero
        a = int(np.flatnonzero(self.H.algebra.unit)[0])
        scale = self.field.inv(self.H.algebra.unit[a])
        rows = inter.basis.reshape(inter.dim, self.R.dim, m)[:, :, a]
        return Subspace(self.field, self.R.dim, self.field.canon(rows * scale))

    def __repr__(self):
        return f"CrossedProduct(dim={self.algebra.dim}, R={self.R!r}, H={self.H!r})"


def crossed_structure(b: ActionBundle) -> np.ndarray:
    """``(e_i#h_a)(e_j#h_b) = sum e_i (h_x . e_j) sigma(h_y, h_u) # h_z h_v``."""
    f, H, R = b.field, b.hopf, b.target
    m, n = H.dim, R.dim
    c, t, s, cH = R.structure, b.act, b.sigma_full, H.algebra.structure
    d2 = H.delta2()  # [a, x, y, z]
    x1 = f.einsum("xjp,ipq->ijxq", t, c)  # e_i (h_x . e_j)
    x2 = f.einsum("ijxq,yur,qrw->ijxyuw", x1, s, c)  # ... sigma(h_y, h_u)
    hz = f.einsum("axyz,buv,zvo->abxyuo", d2, H.delta, cH)
    out = f.einsum("ijxyuw,abxyuo->iajbwo", x2, hz)
    return out.reshape(n * m, n * m, n * m)


def crossed_product(b: ActionBundle) -> CrossedProduct:
    H, R = b.hopf, b.target
    struct = crossed_structure(b)
    unit = b.field.einsum("i,a->ia", R.unit, H.algebra.unit).reshape(-1)
    labels = [f"{r}#{h}" for r in R.labels for h in H.labels]
    alg = algebra_make(b.field, R.dim * H.dim, struct, unit, labels)
    return CrossedProduct(b, alg)


def dual_action(cp: CrossedProduct) -> ActionBundle:
    """``f . (a # h) = sum f(h2) a # h1`` for ``f`` in ``H*`` (basis ``p_c``)."""
    H, f = cp.H, cp.field
    n, m = cp.R.dim, H.dim
    dual = dual_hopf(H)
    # p_c . (r_i # h_a) = sum_x d[a, x, c] r_i # h_x
    act = f.einsum("ij,axc->ciajx", f.identity(n), H.delta).reshape(m, n * m, n * m)
    return action_make(dual, cp.algebra, act)


def double_product(cp: CrossedProduct) -> CrossedProduct:
    return crossed_product(dual_action(cp))


# -- the correspondence Phi / Psi ---------------------------------------------


class Correspondence:
    """Phi: ideals of ``R`` -> ideals of ``B = (R #_sigma H) # H*`` and its inverse Psi.

    ``B`` acts on ``A = R #_sigma H`` by ``rho((x) # f)(y) = x (f . y)``; this
    lands in right ``R``-module endomorphisms of ``A``.
    """

    def __init__(self, cp: CrossedProduct, double: CrossedProduct | None = None):
        self.cp = cp
        self.double = double or double_product(cp)
        f = cp.field
        A = cp.algebra
        na, m = A.dim, cp.H.dim
        dual_act = self.double.bundle.act  # [c, y, z]: p_c . e_y
        # rho[(x, c)][:, y] = e_x (p_c . e_y)
        xy = f.einsum("cyz,xzw->xcyw", dual_act, A.structure)
        self.rho = np.ascontiguousarray(np.transpose(xy, (0, 1, 3, 2)).reshape(na * m, na, na))

    @property
    def field(self):
        return self.cp.field

    def module_product(self, space: Subspace) -> Subspace:
        """``A . (I # 1)``, the right submodule ``M I`` of ``A``."""
        A = self.cp.algebra
        if space.dim == 0:
            return A.zero_space()
        emb = self.cp.embed_vec(space.basis)
        return Subspace(self.field, A.dim, A.mul_many(A.field.identity(A.dim), emb).reshape(-1, A.dim))

    def phi(self, ideal) -> IdealSubspace:
        """``{u in B : rho(u)(A) in A.I}``."""
        space = ideal.space if isinstance(ideal, IdealSubspace) else ideal
        f, B = self.field, self.double.algebra
        target = self.module_product(space)
        if target.is_full():
            return IdealSubspace(B, B.whole(), check=False)
        forms = target.annihilator()
        # condition: forms . rho(u) . e_y = 0 for every y; linear in u
        cond = f.einsum("fw,uwy->fyu", forms, self.rho).reshape(-1, B.dim)
        out = kernel(f, cond)
        if not is_two_sided(B, out):
            raise NotAnIdeal("Phi(I) is not an ideal of the double product")
        return IdealSubspace(B, out, check=False)

    def phi_stable(self, ideal) -> IdealSubspace:
        """``(I #_sigma H) # H*`` for an H-stable ideal ``I``."""
        space = ideal.space if isinstance(ideal, IdealSubspace) else ideal
        if not self.cp.bundle.h_stable(space):
            raise NotAnIdeal("I is not H-stable")
        out = tensor_subspace(self.cp.extend(space), Subspace.full(self.field, self.cp.H.dim))
        return IdealSubspace(self.double.algebra, out)

    def image_module(self, space: Subspace) -> Subspace:
        """``J . A`` = span of ``rho(u)(y)`` for ``u`` in ``J``."""
        A = self.cp.algebra
        if space.dim == 0:
            return A.zero_space()
        imgs = self.field.einsum("bu,uwy->byw", space.basis, self.rho)
        return Subspace(self.field, A.dim, imgs.reshape(-1, A.dim))

    def psi(self, ideal: IdealSubspace, *, check=True) -> IdealSubspace:
        """``{r in R : A.(r # 1) in J.A}``; asserted to satisfy Phi(Psi(J)) = J."""
        f, R, A = self.field, self.cp.R, self.cp.algebra
        img = self.image_module(ideal.space)
        if img.is_full():
            out = R.whole()
        else:
            forms = img.annihilator()
            emb = self.cp.embed_vec(f.identity(R.dim))  # [r, A]
            prods = f.einsum("yi,rj,ijk->ykr", f.identity(A.dim), emb, A.structure)  # e_y (e_r # 1)
            cond = f.einsum("fk,ykr->fyr", forms, prods).reshape(-1, R.dim)
            out = kernel(f, cond)
        result = IdealSubspace(R, out)
        if check and self.phi(result).space != ideal.space:
            raise NoPreimage("Phi(Psi(J)) != J: J is not in the image of Phi")
        return result


def phi_map(cp: CrossedProduct, ideal: IdealSubspace, h_stable: bool = False, corr: Correspondence | None = None) -> IdealSubspace:
    corr = corr or Correspondence(cp)
    general = corr.phi(ideal)
    if h_stable:
        stable = corr.phi_stable(ideal)
        if stable.space != general.space:
            raise AssertionError("Phi via End(A_R) disagrees with (I # H) # H*")
        return stable
    return general


def psi_map(cp: CrossedProduct, ideal: IdealSubspace, corr: Correspondence | None = None) -> IdealSubspace:
    return (corr or Correspondence(cp)).psi(ideal)


# -- derived bundles -----------------------------------------------------------


def quotient_bundle(b: ActionBundle, ideal: IdealSubspace):
    """The induced action on ``R / I`` for an H-stable ideal ``I``; returns ``(bundle, quotient)``."""
    if not b.h_stable(ideal.space):
        raise NotAnIdeal("quotient needs an H-stable ideal")
    q = Quotient(b.target, ideal)
    Rq = q.algebra
    f = b.field
    basis = q.lift_vec(f.identity(Rq.dim))
    act = q.project_vec(f.einsum("aj,ijk->iak", basis, b.act))
    sigma = None if b.sigma is None else q.project_vec(b.sigma)
    return action_make(b.hopf, Rq, act, sigma), q

