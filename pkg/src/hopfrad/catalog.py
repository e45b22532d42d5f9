"""Built-in algebras, Hopf algebras and action scenarios."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .action import (
    ActionBundle,
    Correspondence,
    CrossedProduct,
    action_make,
    crossed_product,
    dual_action,
    inner_action,
    trivial_action,
)
from .algebra import AlgebraDef, algebra_make, direct_product, matrix_algebra
from .field import GF2, GF3, QQ, FieldSpec
from .hopf import (
    HopfDef,
    cyclic_group_algebra,
    dual_hopf,
    group_algebra,
    is_cocommutative,
    is_commutative,
    is_cosemisimple_hopf,
    is_semisimple_hopf,
    restricted_env,
)

TAGS = (
    "semisimple_H",
    "cosemisimple_H",
    "commutative_H",
    "cocommutative_H",
    "inner_action",
    "trivial_sigma",
    "finite_field",
    "char_divides_dimH",
)


# -- algebras ------------------------------------------------------------------


def ground_field(f: FieldSpec) -> AlgebraDef:
    return algebra_make(f, 1, [[[1]]], [1], ["1"])


def truncated_poly(f: FieldSpec, n: int, var="x") -> AlgebraDef:
    """``k[x]/(x^n)`` on the basis 1, x, ..., x^(n-1)."""
    c = f.zeros((n, n, n))
    for a in range(n):
        for b in range(n - a):
            c[a, b, a + b] = 1
    labels = ["1", var] + [f"{var}^{k}" for k in range(2, n)]
    return algebra_make(f, n, c, f.unit_vector(n, 0), labels[:n])


def quotient_poly(f: FieldSpec, coeffs, var="x") -> AlgebraDef:
    """``k[x]/(m(x))`` for monic ``m = x^n + coeffs[n-1] x^(n-1) + ... + coeffs[0]``."""
    n = len(coeffs)
    red = [f.canon(-np.asarray(coeffs))]  # x^n
    for _ in range(n - 1):  # x^(n+1), ..., x^(2n-2)
        prev = red[-1]
        nxt = f.zeros(n)
        nxt[1:] = prev[:-1]
        nxt = f.canon(nxt + prev[-1] * red[0])
        red.append(nxt)
    c = f.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            if a + b < n:
                c[a, b, a + b] = 1
            else:
                c[a, b] = red[a + b - n]
    labels = ["1", var] + [f"{var}^{k}" for k in range(2, n)]
    return algebra_make(f, n, c, f.unit_vector(n, 0), labels[:n])


def matrix_ring(f: FieldSpec, n: int) -> AlgebraDef:
    base = matrix_algebra(ground_field(f), n)
    labels = [f"E{r + 1}{s + 1}" for r in range(n) for s in range(n)]
    return algebra_make(f, n * n, base.structure, base.unit, labels)


def upper_triangular(f: FieldSpec, n: int) -> AlgebraDef:
    """Upper triangular n x n matrices, basis ``E_rs`` (r <= s) in row order."""
    pairs = [(r, s) for r in range(n) for s in range(r, n)]
    idx = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    c = f.zeros((m, m, m))
    for (r, s), i in idx.items():
        for (t, u), j in idx.items():
            if s == t:
                c[i, j, idx[(r, u)]] = 1
    unit = f.zeros(m)
    for r in range(n):
        unit[idx[(r, r)]] = 1
    return algebra_make(f, m, c, unit, [f"E{r + 1}{s + 1}" for r, s in pairs])


def exterior_algebra(f: FieldSpec) -> AlgebraDef:
    """Exterior algebra on two generators: basis 1, x, y, xy."""
    c = f.zeros((4, 4, 4))
    for j in range(4):
        c[0, j, j] = 1
        c[j, 0, j] = 1
    c[1, 2, 3] = 1
    c[2, 1, 3] = f.scalar(-1)
    return algebra_make(f, 4, c, f.unit_vector(4, 0), ["1", "x", "y", "xy"])


def square_zero(f: FieldSpec, k: int) -> AlgebraDef:
    """``k[x_1..x_k]/(x_i x_j)``: dimension k+1, radical squared zero."""
    n = k + 1
    c = f.zeros((n, n, n))
    for j in range(n):
        c[0, j, j] = 1
        c[j, 0, j] = 1
    return algebra_make(f, n, c, f.unit_vector(n, 0), ["1"] + [f"x{i + 1}" for i in range(k)])


def catalog_algebras() -> dict:
    """Small algebras over GF(2) and GF(3) (dimension at most 4), by name."""
    out = {
        "gf2": ground_field(GF2),
        "gf3": ground_field(GF3),
        "gf2[x]/(x^2)": truncated_poly(GF2, 2),
        "gf2[x]/(x^3)": truncated_poly(GF2, 3),
        "gf2[x]/(x^4)": truncated_poly(GF2, 4),
        "gf3[x]/(x^2)": truncated_poly(GF3, 2),
        "gf3[x]/(x^3)": truncated_poly(GF3, 3),
        "gf4": quotient_poly(GF2, [1, 1]),
        "gf9": quotient_poly(GF3, [1, 0]),
        "gf2[x]/(x^2+x)": quotient_poly(GF2, [0, 1]),
        "gf2[x,y]/(x,y)^2": square_zero(GF2, 2),
        "gf3[x,y]/(x,y)^2": square_zero(GF3, 2),
        "kC2/gf2": cyclic_group_algebra(GF2, 2).algebra,
        "kC2/gf3": cyclic_group_algebra(GF3, 2).algebra,
        "kC3/gf2": cyclic_group_algebra(GF2, 3).algebra,
        "kC3/gf3": cyclic_group_algebra(GF3, 3).algebra,
        "kC4/gf2": cyclic_group_algebra(GF2, 4).algebra,
        "T2/gf2": upper_triangular(GF2, 2),
        "T2/gf3": upper_triangular(GF3, 2),
        "M2/gf2": matrix_ring(GF2, 2),
        "M2/gf3": matrix_ring(GF3, 2),
        "ext2/gf3": exterior_algebra(GF3),
        "gf2xgf2[x]/(x^2)": direct_product(ground_field(GF2), truncated_poly(GF2, 2)),
        "u(kd)/gf2/0": restricted_env(GF2, 0).algebra,
        "u(kd)/gf3/1": restricted_env(GF3, 1).algebra,
    }
    return out


def catalog_hopf() -> dict:
    out = {}
    for f, fname in ((GF2, "gf2"), (GF3, "gf3"), (QQ, "q")):
        for n in (2, 3):
            h = cyclic_group_algebra(f, n)
            out[f"kC{n}/{fname}"] = h
            out[f"(kC{n})*/{fname}"] = dual_hopf(h)
    for f, fname in ((GF2, "gf2"), (GF3, "gf3")):
        for lam in (0, 1):
            out[f"u(kd)/{fname}/{lam}"] = restricted_env(f, lam)
    return out


# -- actions -------------------------------------------------------------------


def derivation_action(hopf: HopfDef, target: AlgebraDef, dmat) -> ActionBundle:
    """``d^a`` acts by ``D^a`` on a u(kd)-module algebra (``dmat`` acts on columns)."""
    f = target.field
    n = target.dim
    act = f.zeros((hopf.dim, n, n))
    power = f.identity(n)
    for a in range(hopf.dim):
        act[a] = power.T
        power = f.dot(f.canon(dmat), power)
    return action_make(hopf, target, act)


def shift_derivation(f: FieldSpec) -> np.ndarray:
    """The derivation of ``k[x]/(x^p)`` with ``x -> x + 1``: ``x^a -> a x^(a-1) (x+1)``."""
    p = f.p
    d = f.zeros((p, p))
    for a in range(1, p):
        d[a - 1, a] = a % p
        d[a, a] = (d[a, a] + a) % p
    return f.canon(d)


def grading_action(hopf: HopfDef, target: AlgebraDef, degrees) -> ActionBundle:
    """``(kG)*`` acting through a grading with homogeneous basis; ``degrees[j]`` indexes G."""
    f = target.field
    act = f.zeros((hopf.dim, target.dim, target.dim))
    for j, g in enumerate(degrees):
        act[g, j, j] = 1
    return action_make(hopf, target, act)


def permutation_action(hopf: HopfDef, target: AlgebraDef, perm_of) -> ActionBundle:
    """``h_i . e_j = e_{perm_of(i, j)}`` for a group algebra acting on a product of fields."""
    f = target.field
    act = f.zeros((hopf.dim, target.dim, target.dim))
    for i in range(hopf.dim):
        for j in range(target.dim):
            act[i, j, perm_of(i, j)] = 1
    return action_make(hopf, target, act)


def diagonal_action(hopf: HopfDef, target: AlgebraDef, scalars) -> ActionBundle:
    """``h_i . e_j = scalars[i][j] e_j``."""
    f = target.field
    act = f.zeros((hopf.dim, target.dim, target.dim))
    for i in range(hopf.dim):
        for j in range(target.dim):
            act[i, j, j] = f.scalar(scalars[i][j])
    return action_make(hopf, target, act)


# -- scenarios -------------------------------------------------------------------


@dataclass(eq=False)
class Scenario:
    name: str
    bundle: ActionBundle
    description: str = ""
    tags: frozenset = dc_field(default=frozenset())

    def __post_init__(self):
        self.tags = compute_tags(self.bundle)

    @property
    def R(self) -> AlgebraDef:
        return self.bundle.target

    @property
    def H(self) -> HopfDef:
        return self.bundle.hopf

    @cached_property
    def cp(self) -> CrossedProduct:
        return crossed_product(self.bundle)

    @cached_property
    def dual_bundle(self) -> ActionBundle:
        return dual_action(self.cp)

    @cached_property
    def double(self) -> CrossedProduct:
        return crossed_product(self.dual_bundle)

    @cached_property
    def corr(self) -> Correspondence:
        return Correspondence(self.cp, self.double)

    def has(self, *tags) -> bool:
        return all(t in self.tags for t in tags)

    def __repr__(self):
        return f"Scenario({self.name}, tags={sorted(self.tags)})"


def compute_tags(b: ActionBundle) -> frozenset:
    h = b.hopf
    tags = set()
    if is_semisimple_hopf(h):
        tags.add("semisimple_H")
    if is_cosemisimple_hopf(h):
        tags.add("cosemisimple_H")
    if is_commutative(h):
        tags.add("commutative_H")
    if is_cocommutative(h):
        tags.add("cocommutative_H")
    if b.inner_unit is not None:
        tags.add("inner_action")
    if b.has_trivial_sigma():
        tags.add("trivial_sigma")
    if b.field.is_finite:
        tags.add("finite_field")
        if h.dim % b.field.p == 0:
            tags.add("char_divides_dimH")
    return frozenset(tags)


def _scen1(f: FieldSpec) -> ActionBundle:
    return derivation_action(restricted_env(f, 1), truncated_poly(f, f.p), shift_derivation(f))


def _scen_graded_m2() -> ActionBundle:
    h = dual_hopf(cyclic_group_algebra(GF3, 2))
    return grading_action(h, matrix_ring(GF3, 2), [0, 1, 1, 0])


def _scen_twisted_gf9() -> ActionBundle:
    h = cyclic_group_algebra(GF3, 2)
    r = ground_field(GF3)
    sigma = np.ones((2, 2, 1), dtype=np.int64)
    sigma[1, 1, 0] = 2  # sigma(g, g) = -1
    from .action import trivial_act

    return action_make(h, r, trivial_act(h, r), sigma)


def _inner_kc2(target: AlgebraDef, ug) -> ActionBundle:
    h = cyclic_group_algebra(GF3, 2)
    u = np.array([target.unit, ug], dtype=np.int64)
    return inner_action(h, target, u)


def _builders():
    kc2_gf3 = lambda: cyclic_group_algebra(GF3, 2)  # noqa: E731
    return [
        ("scen1-p2", "u(kd), d.x = x+1, on GF(2)[x]/(x^2)", lambda: _scen1(GF2)),
        ("scen2-p3", "u(kd), d.x = x+1, on GF(3)[x]/(x^3)", lambda: _scen1(GF3)),
        ("scen3-kc2-gf3", "kC2 on GF(3)[x]/(x^2), g.x = -x", lambda: diagonal_action(kc2_gf3(), truncated_poly(GF3, 2), [[1, 1], [1, 2]])),
        ("scen4-graded-m2", "(kC2)* grading of M2(GF(3)) by diagonal/antidiagonal", _scen_graded_m2),
        (
            "scen4b-graded-dual-numbers",
            "(kC2)* grading of GF(3)[x]/(x^2) with x odd",
            lambda: grading_action(dual_hopf(kc2_gf3()), truncated_poly(GF3, 2), [0, 1]),
        ),
        ("scen5a-trivial-kc2-gf2", "trivial kC2 on GF(2)[x]/(x^2)", lambda: trivial_action(cyclic_group_algebra(GF2, 2), truncated_poly(GF2, 2))),
        ("scen5b-trivial-kc2-gf3", "trivial kC2 on GF(3)[x]/(x^2)", lambda: trivial_action(kc2_gf3(), truncated_poly(GF3, 2))),
        ("scen5c-trivial-kc3-q", "trivial kC3 on T2(Q)", lambda: trivial_action(cyclic_group_algebra(QQ, 3), upper_triangular(QQ, 2))),
        ("scen5d-trivial-kc2-t2-gf3", "trivial kC2 on T2(GF(3))", lambda: trivial_action(kc2_gf3(), upper_triangular(GF3, 2))),
        ("scen6-inner-m2", "kC2 on M2(GF(3)) by conjugation with diag(1,-1)", lambda: _inner_kc2(matrix_ring(GF3, 2), [1, 0, 0, 2])),
        ("scen6b-inner-t2", "kC2 on T2(GF(3)) by conjugation with diag(1,-1)", lambda: _inner_kc2(upper_triangular(GF3, 2), [1, 0, 2])),
        ("scen7-twisted-gf9", "GF(3) #_sigma kC2 with sigma(g,g) = -1", _scen_twisted_gf9),
        ("scen8-kc3-gf2", "trivial kC3 on GF(2)[x]/(x^2)", lambda: trivial_action(cyclic_group_algebra(GF2, 3), truncated_poly(GF2, 2))),
        (
            "scen9-graded-c3-gf2",
            "(kC3)* grading of GF(2)[x]/(x^3) by degree mod 3",
            lambda: grading_action(dual_hopf(cyclic_group_algebra(GF2, 3)), truncated_poly(GF2, 3), [0, 1, 2]),
        ),
        (
            "scen10-perm-kc3-gf2",
            "kC3 permuting the factors of GF(2)^3",
            lambda: permutation_action(
                cyclic_group_algebra(GF2, 3), direct_product(*[ground_field(GF2)] * 3), lambda i, j: (i + j) % 3
            ),
        ),
        (
            "scen11-perm-kc3-q",
            "kC3 permuting the factors of Q^3",
            lambda: permutation_action(
                cyclic_group_algebra(QQ, 3), direct_product(*[ground_field(QQ)] * 3), lambda i, j: (i + j) % 3
            ),
        ),
        (
            "scen12-swap-kc2-gf2",
            "kC2 swapping the factors of GF(2)^2 (H not semisimple)",
            lambda: permutation_action(
                cyclic_group_algebra(GF2, 2), direct_product(*[ground_field(GF2)] * 2), lambda i, j: (i + j) % 2
            ),
        ),
        (
            "scen13-nilpotent-d-gf2",
            "u(kd) with d^2 = 0, d.x = 1, on GF(2)[x]/(x^2)",
            lambda: derivation_action(restricted_env(GF2, 0), truncated_poly(GF2, 2), [[0, 1], [0, 0]]),
        ),
    ]


SCENARIO_NAMES = tuple(name for name, _, _ in _builders())


def scenario(name: str) -> Scenario:
    for n, desc, build in _builders():
        if n == name:
            return Scenario(n, build(), desc)
    raise KeyError(f"unknown scenario {name!r}; known: {', '.join(SCENARIO_NAMES)}")


def catalog() -> list:
    """Every built-in scenario, verified at construction, in canonical order."""
    return [Scenario(n, build(), desc) for n, desc, build in _builders()]
