"""Runnable checks of the radical identities against the scenario catalog.

Each checker computes both sides of an identity by independent routes and
reports ``identity_holds`` / ``identity_fails`` together with the compared
subspaces.  A checker made of several parts is ``identity_holds`` when every
part holds, ``identity_fails`` when every part fails and ``mixed`` otherwise.
"""

from __future__ import annotations

import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Callable

from .action import ActionBundle
from .algebra import (
    ELEMENT_LIMIT,
    TooLarge,
    enumerate_ideals_by_generators,
    ideal_product,
    IdealSubspace,
    is_prime_ideal,
    is_semiprime_ideal,
)
from .catalog import Scenario, catalog
from .hopf import group_table_if_dual_group_algebra, group_table_if_group_algebra
from .hradical import (
    R_HN_MAX_R,
    W_H_MAX_H,
    W_H_MAX_R,
    colon_H,
    enumerate_h_ideals,
    grading_from_dual,
    h_spec_intersection,
    is_gr_regular,
    is_h_regular,
    is_h_regular_element,
    is_h_semiprime,
    is_h_semiprime_ideal,
    r_Hn,
    r_Hn_of_quotient,
    w_H_oracle,
)
from .linalg import Subspace, intersect_all
from .radical import baer_radical, jacobson_radical, nil_ideal_oracle, radical, radical_of_subalgebra

HOLDS = "identity_holds"
FAILS = "identity_fails"
MIXED = "mixed"

PHI_MAX_ELEMENTS = ELEMENT_LIMIT


class HypothesisNotMet(Exception):
    pass


# -- report types --------------------------------------------------------------


@dataclass(frozen=True)
class Part:
    name: str
    ok: bool
    lhs: dict | None = None
    rhs: dict | None = None
    witness: str | None = None


@dataclass(frozen=True)
class VerdictReport:
    theorem_id: str
    scenario: str
    expected: str
    observed: str
    lhs: dict | None
    rhs: dict | None
    witness: str | None
    parts: tuple = ()

    @property
    def passed(self) -> bool:
        return self.observed == self.expected

    def to_dict(self) -> dict:
        d = asdict(self)
        d["parts"] = [{"name": n, "ok": ok} for n, ok in self.parts]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize(alg, space: Subspace) -> dict:
    return {"dim": space.dim, "basis": [alg.format(row) for row in space.basis]}


def _outside(alg, a: Subspace, b: Subspace) -> str | None:
    for row in a.basis:
        if not b.contains(row):
            return alg.format(row)
    return None


def equal(name, alg, lhs: Subspace, rhs: Subspace) -> Part:
    ok = lhs == rhs
    wit = None if ok else (_outside(alg, lhs, rhs) or _outside(alg, rhs, lhs))
    return Part(name, ok, serialize(alg, lhs), serialize(alg, rhs), wit)


def included(name, alg, lhs: Subspace, rhs: Subspace) -> Part:
    ok = lhs <= rhs
    return Part(name, ok, serialize(alg, lhs), serialize(alg, rhs), None if ok else _outside(alg, lhs, rhs))


def same_truth(name, a: bool, b: bool, witness: str | None = None) -> Part:
    ok = bool(a) == bool(b)
    return Part(name, ok, {"value": bool(a)}, {"value": bool(b)}, None if ok else (witness or f"{bool(a)} vs {bool(b)}"))


def all_of(name, parts) -> Part:
    """Collapse a family of parts; the first failure supplies the witness."""
    parts = list(parts)
    for p in parts:
        if not p.ok:
            return Part(name, False, p.lhs, p.rhs, f"{p.name}: {p.witness}")
    return Part(name, True, {"count": len(parts)}, {"count": len(parts)})


# -- per-scenario memo of shared quantities ---------------------------------------

_memo_lock = threading.Lock()


def _memo(scen: Scenario, key: str, fn: Callable):
    store = scen.__dict__.setdefault("_theorem_memo", {})
    if key not in store:
        value = fn()
        with _memo_lock:
            store.setdefault(key, value)
    return store[key]


def _finite_enumerable(scen: Scenario, limit: int = ELEMENT_LIMIT) -> bool:
    return scen.bundle.field.is_finite and scen.R.size <= limit


def rb_R(s):
    return _memo(s, "rb_R", lambda: radical(s.R))


def rb_A(s):
    return _memo(s, "rb_A", lambda: radical(s.cp.algebra))


def rb_B(s):
    return _memo(s, "rb_B", lambda: radical(s.double.algebra))


def rbH(s):
    """``(r_b(R) : H)``; equals ``(r_j(R) : H)`` in finite dimension."""
    return _memo(s, "rbH", lambda: colon_H(s.bundle, rb_R(s)).space)


def r_A_cap_R(s):
    """``r_b(R #_sigma H) cap R`` (also the literal ``r_Hj``)."""
    return _memo(s, "rAcapR", lambda: s.cp.restrict(rb_A(s)))


def h_ideals(s):
    return _memo(s, "h_ideals", lambda: enumerate_h_ideals(s.bundle))


def rHb_def(s):
    """Intersection of all H-semiprime ideals when they can be enumerated.

    Over Q this falls back to ``(r_b(R) : H)``, the largest nilpotent H-ideal.
    """

    def compute():
        if not _finite_enumerable(s):
            return rbH(s)
        b = s.bundle
        semis = [i.space for i in h_ideals(s) if i.is_proper() and is_h_semiprime_ideal(b, i)]
        return intersect_all(semis, b.field, s.R.dim)

    return _memo(s, "rHb_def", compute)


def r_dual_b(s):
    """``(r_b(A) : H*)`` for the dual action on ``A``."""
    return _memo(s, "r_dual_b", lambda: colon_H(s.dual_bundle, rb_A(s)).space)


def r_dual_j_literal(s):
    """``r_j(A # H*) cap A``."""
    return _memo(s, "r_dual_j", lambda: s.double.restrict(rb_B(s)))


def h_semiprime(s) -> bool:
    def compute():
        if _finite_enumerable(s):
            return is_h_semiprime(s.bundle)
        return rHb_def(s).dim == 0

    return _memo(s, "h_semiprime", compute)


# -- hypotheses --------------------------------------------------------------------


def _need(cond: bool, reason: str):
    if not cond:
        raise HypothesisNotMet(reason)


def _feasible(cond: bool, reason: str):
    if not cond:
        raise TooLarge(reason)


def _group_kind(s: Scenario):
    if group_table_if_group_algebra(s.H) is not None:
        return "kG"
    if group_table_if_dual_group_algebra(s.H) is not None:
        return "(kG)*"
    return None


# -- checkers ---------------------------------------------------------------------


def _t1015_pre(s):
    _need(s.has("finite_field"), "needs a finite field")
    _feasible(s.R.size <= W_H_MAX_R and s.H.algebra.size <= W_H_MAX_H, "W_H needs |R| <= 256 and |H| <= 16")


def _t1015(s):
    b, R = s.bundle, s.R
    formula, graph = rbH(s), w_H_oracle(b).space
    spec_cap = h_spec_intersection(b).space
    return [
        equal("(r_b:H) = W_H", R, formula, graph),
        equal("W_H = cap H-Spec", R, graph, spec_cap),
        equal("cap H-semiprime = W_H", R, rHb_def(s), graph),
    ]


def _p1024(s):
    R, A = s.R, s.cp.algebra
    return [
        included("r_Hb <= r_b(A) cap R", R, rHb_def(s), r_A_cap_R(s)),
        included("r_b(A) cap R <= (r_b:H)", R, r_A_cap_R(s), rbH(s)),
        included("r_Hb # H <= r_b(A)", A, s.cp.extend(rHb_def(s)), rb_A(s)),
    ]


def _p1025(s):
    R, A = s.R, s.cp.algebra
    return [
        equal("r_Hb = (r_b:H)", R, rHb_def(s), rbH(s)),
        equal("(r_b:H) = r_b(A) cap R", R, rbH(s), r_A_cap_R(s)),
        equal("r_H*b(A) = r_Hb # H", A, r_dual_b(s), s.cp.extend(rHb_def(s))),
    ]


def _inner_pre(s):
    _need(s.has("inner_action"), "needs an inner action")


def _t1026(s):
    R, A = s.R, s.cp.algebra
    parts = [
        equal("r_Hb = r_b", R, rHb_def(s), rb_R(s)),
        equal("r_b = (r_b:H)", R, rb_R(s), rbH(s)),
    ]
    if s.has("semisimple_H"):
        parts.append(equal("r_b(A) = r_Hb # H", A, rb_A(s), s.cp.extend(rHb_def(s))))
    return parts


def _t10211(s):
    R, A = s.R, s.cp.algebra
    rj = jacobson_radical(R).value.space
    parts = [
        equal("r_Hj = r_j", R, r_A_cap_R(s), rj),
        equal("r_j = (r_j:H)", R, rj, rbH(s)),
    ]
    if s.has("semisimple_H"):
        parts.append(equal("r_j(A) = r_Hj # H", A, jacobson_radical(A).value.space, s.cp.extend(r_A_cap_R(s))))
    return parts


def _t1027_pre(s):
    _need(s.has("semisimple_H"), "needs H semisimple")
    _need(s.has("commutative_H") or s.has("cocommutative_H"), "needs H commutative or cocommutative")


def _t1027(s):
    R, A = s.R, s.cp.algebra
    a_semiprime = rb_A(s).dim == 0
    parts = [
        equal("r_b(A) = r_Hb # H", A, rb_A(s), s.cp.extend(rHb_def(s))),
        same_truth("H-semiprime(R) iff semiprime(A)", h_semiprime(s), a_semiprime),
    ]
    if s.has("cosemisimple_H") or not s.has("char_divides_dimH"):
        r_semiprime = rb_R(s).dim == 0
        parts += [
            equal("r_Hb = (r_b:H)", R, rHb_def(s), rbH(s)),
            equal("(r_b:H) = r_b", R, rbH(s), rb_R(s)),
            same_truth("H-semiprime(R) iff semiprime(R)", h_semiprime(s), r_semiprime),
            same_truth("semiprime(R) iff semiprime(A)", r_semiprime, a_semiprime),
        ]
    return parts


def _p1029(s):
    R, A = s.R, s.cp.algebra
    return [
        included("r_j(A) cap R <= (r_j:H)", R, r_A_cap_R(s), rbH(s)),
        included("r_Hj # H <= r_j(A)", A, s.cp.extend(r_A_cap_R(s)), jacobson_radical(A).value.space),
    ]


def _p10210(s):
    R, A = s.R, s.cp.algebra
    return [
        equal("(r_j:H) # H = r_H*j(A)", A, s.cp.extend(rbH(s)), r_dual_j_literal(s)),
        equal("r_Hj = (r_j:H)", R, r_A_cap_R(s), rbH(s)),
    ]


def _t1048_pre(s):
    _need(_group_kind(s) is not None, "needs H = kG or (kG)*")
    _need(not s.has("char_divides_dimH"), "needs |G| invertible in k")


def _t1048(s):
    R, A = s.R, s.cp.algebra
    rj = jacobson_radical(R).value.space
    return [
        equal("r_j = r_Hj", R, rj, r_A_cap_R(s)),
        equal("r_Hj = (r_j:H)", R, r_A_cap_R(s), rbH(s)),
        equal("r_j(A) = r_Hj # H", A, jacobson_radical(A).value.space, s.cp.extend(r_A_cap_R(s))),
    ]


def _e10410_pre(s):
    for tag in ("finite_field", "semisimple_H", "commutative_H", "cocommutative_H", "char_divides_dimH"):
        _need(s.has(tag), f"needs {tag}")
    _need(not s.has("cosemisimple_H"), "needs H not cosemisimple")
    _need(s.R.is_commutative(), "needs R commutative")


def _e10410(s):
    B, dbl = s.double.algebra, s.double
    rj_B = jacobson_radical(B).value.space
    return [
        equal("r_b(A#H*) = r_H*b(A) # H*", B, baer_radical(B).value.space, dbl.extend(r_dual_b(s))),
        equal("r_j(A#H*) = r_H*j(A) # H*", B, rj_B, dbl.extend(r_dual_j_literal(s))),
        included("r_j(A#H*) <= (r_j(A):H*) # H*", B, rj_B, dbl.extend(colon_H(s.dual_bundle, rb_A(s)).space)),
    ]


def _phi_pre(s):
    _need(s.has("finite_field"), "needs a finite field")
    _feasible(s.double.algebra.size <= PHI_MAX_ELEMENTS, "ideal enumeration of A#H* exceeds the element limit")


def _phi_suite(s):
    R, B, cp, corr = s.R, s.double.algebra, s.cp, s.corr
    A = cp.algebra
    r_ideals = enumerate_ideals_by_generators(R)
    b_ideals = enumerate_ideals_by_generators(B)
    phi = {i.space: corr.phi(i) for i in r_ideals}
    images = {j.space for j in phi.values()}
    n2 = s.H.dim**2
    pairs = [(i, j) for i in r_ideals for j in r_ideals]
    parts = [
        Part("Phi injective", len(images) == len(r_ideals), {"count": len(r_ideals)}, {"count": len(images)},
             None if len(images) == len(r_ideals) else "two ideals share an image"),
        Part("Phi surjective", images == {j.space for j in b_ideals}, {"count": len(images)}, {"count": len(b_ideals)},
             None if images == {j.space for j in b_ideals} else "an ideal of A#H* is missed"),
        all_of("Psi(Phi(I)) = I", (equal(R.format(i.basis[0]) if i.dim else "0", R, corr.psi(phi[i.space]).space, i.space) for i in r_ideals)),
        all_of("dim Phi(I) = (dim H)^2 dim I", (
            Part(f"dim {i.dim}", phi[i.space].dim == n2 * i.dim, {"dim": phi[i.space].dim}, {"dim": n2 * i.dim}, "dimension mismatch")
            for i in r_ideals)),
        all_of("containments", (
            same_truth("I <= J", i.space <= j.space, phi[i.space].space <= phi[j.space].space) for i, j in pairs)),
        all_of("products", (
            equal("Phi(IJ)", B, corr.phi(ideal_product(i, j)).space, ideal_product(phi[i.space], phi[j.space]).space)
            for i, j in pairs)),
        all_of("intersections", (
            equal("Phi(I cap J)", B, corr.phi(i.space & j.space).space, phi[i.space].space & phi[j.space].space)
            for i, j in pairs)),
        equal("Phi(cap I) = cap Phi(I)", B,
              corr.phi(intersect_all([i.space for i in r_ideals], R.field, R.dim)).space,
              intersect_all([p.space for p in phi.values()], R.field, B.dim)),
    ]
    proper = [i for i in r_ideals if i.is_proper()]
    parts.append(all_of("prime iff Phi prime", (
        same_truth("prime", is_prime_ideal(R, i), is_prime_ideal(B, phi[i.space])) for i in proper)))
    parts.append(all_of("semiprime iff Phi semiprime", (
        same_truth("semiprime", is_semiprime_ideal(R, i), is_semiprime_ideal(B, phi[i.space])) for i in proper)))
    parts.append(equal("Phi(r_j(R)) = r_j(A#H*)", B, corr.phi(jacobson_radical(R).value.space).space, jacobson_radical(B).value.space))
    parts.append(equal("Phi(r_b(R)) = r_b(A#H*)", B, corr.phi(nil_ideal_oracle(R, "generators").space).space, baer_radical(B).value.space))
    parts.append(all_of("Phi(I) = (I#H)#H* for H-ideals", (
        equal("H-ideal", B, corr.phi(i).space, corr.phi_stable(i).space) for i in h_ideals(s))))
    parts.append(all_of("P = (P cap R)#H for H*-ideals of A", (
        equal("H*-ideal", A, p.space, cp.extend(cp.restrict(p.space))) for p in enumerate_h_ideals(s.dual_bundle))))
    return parts


def _regular_pre(s):
    _need(s.has("finite_field"), "needs a finite field")
    _need(s.has("trivial_sigma"), "needs an H-module algebra (trivial cocycle)")
    _feasible(s.R.size <= R_HN_MAX_R, "r_Hn enumeration needs |R| <= 256")


def _t1055x(s):
    q = r_Hn_of_quotient(s.bundle)
    return [Part("r_Hn(R / r_Hn(R)) = 0", q.dim == 0, {"dim": q.dim}, {"dim": 0}, None if q.dim == 0 else f"dim {q.dim}")]


def _t1056(s):
    b, R = s.bundle, s.R
    whole = r_Hn(b).space
    parts, intrinsic = [], []
    for ideal in h_ideals(s):
        parts.append(equal("r_Hn(I) = r_Hn(R) cap I", R, r_Hn(b, ideal).space, whole & ideal.space))
        for a in ideal.space.elements():
            intrinsic.append(same_truth("regular in I iff in R", is_h_regular_element(b, a, ideal.space),
                                        is_h_regular_element(b, a), R.format(a)))
    return [all_of("hereditary", parts), all_of("regularity intrinsic to H-ideals", intrinsic)]


def _t1057_pre(s):
    _regular_pre(s)
    _need(_group_kind(s) == "(kG)*", "needs H = (kG)*")


def _t1057(s):
    gr, gr_wit = is_gr_regular(grading_from_dual(s.bundle))
    h, h_wit = is_h_regular(s.bundle)
    wit = gr_wit if gr_wit is not None else h_wit
    # keep the non-regular element even when both sides agree on "not regular"
    return [Part("Gr-regular iff H-regular", gr == h, {"value": gr}, {"value": h}, None if wit is None else s.R.format(wit))]


def _t1063_pre(s):
    _need(s.has("trivial_sigma"), "needs a smash product (trivial cocycle)")


def _t1063(s):
    A, cp = s.cp.algebra, s.cp
    rj_A = jacobson_radical(A).value.space
    rhj_h = cp.extend(r_A_cap_R(s))
    rjh_h = cp.extend(rbH(s))
    inner = radical_of_subalgebra(A, rhj_h)
    first = rj_A == rhj_h
    return [
        equal("r_j(r_Hj # H) = r_Hj # H", A, inner, rhj_h),
        same_truth("r_j(A) = r_Hj#H iff r_j(r_Hj#H) = r_j(A)", first, inner == rj_A),
        same_truth("r_j(A) = r_Hj#H iff r_j((r_j(A) cap R)#H) = r_j(A)", first,
                   radical_of_subalgebra(A, cp.extend(cp.restrict(rj_A))) == rj_A),
        same_truth("r_j(A) = r_Hj#H iff r_j((r_j:H)#H) = r_j(A)", first, radical_of_subalgebra(A, rjh_h) == rj_A),
    ]


def _none(s):
    return None


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    expected: str
    pre: Callable = dc_field(repr=False)
    run: Callable = dc_field(repr=False)


THEOREMS = (
    Theorem("T1015", "r_Hb = W_H = intersection of H-primes", HOLDS, _t1015_pre, _t1015),
    Theorem("P1024", "r_Hb <= r_b(A) cap R <= (r_b:H)", HOLDS, _none, _p1024),
    Theorem("P1025", "r_Hb = (r_b:H) = r_b(A) cap R", HOLDS, _none, _p1025),
    Theorem("T1026", "inner action: Baer radicals agree", HOLDS, _inner_pre, _t1026),
    Theorem("T10211", "inner action: Jacobson radicals agree", HOLDS, _inner_pre, _t10211),
    Theorem("T1027", "semisimple (co)commutative H: r_b(A) = r_Hb # H", HOLDS, _t1027_pre, _t1027),
    Theorem("P1029", "r_j(A) cap R <= (r_j:H)", HOLDS, _none, _p1029),
    Theorem("P10210", "(r_j:H) # H = r_H*j(A)", HOLDS, _none, _p10210),
    Theorem("T1048", "group (dual) algebras: r_j(A) = r_Hj # H", HOLDS, _t1048_pre, _t1048),
    Theorem("E10410", "u(kd) counterexample: r_b(A#H*) != r_H*b(A) # H*", FAILS, _e10410_pre, _e10410),
    Theorem("L1022", "Phi: ideals of R -> ideals of A#H*", HOLDS, _phi_pre, _phi_suite),
    Theorem("T1055x", "r_Hn of the quotient vanishes", HOLDS, _regular_pre, _t1055x),
    Theorem("T1056", "r_Hn is strongly hereditary", HOLDS, _regular_pre, _t1056),
    Theorem("T1057", "Gr-regular iff H-regular", HOLDS, _t1057_pre, _t1057),
    Theorem("T1063", "Jacobson radical of the smash product biconditional", HOLDS, _t1063_pre, _t1063),
)

ALIASES = {"L1023": "L1022"}

THEOREM_IDS = tuple(t.id for t in THEOREMS)


def theorem(theorem_id: str) -> Theorem:
    tid = ALIASES.get(theorem_id, theorem_id)
    for t in THEOREMS:
        if t.id == tid:
            return t
    raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")


def applicable(theorem_id: str, scen: Scenario) -> bool:
    try:
        theorem(theorem_id).pre(scen)
    except (HypothesisNotMet, TooLarge):
        return False
    return True


def _verdict(t: Theorem, scen: Scenario, parts) -> VerdictReport:
    oks = [p.ok for p in parts]
    observed = HOLDS if all(oks) else FAILS if not any(oks) else MIXED
    want = t.expected == HOLDS
    if observed == t.expected:
        head = parts[0]
    else:
        head = next(p for p in parts if p.ok != want)
    witness = head.witness
    if observed != HOLDS and witness is None:
        failing = next(p for p in parts if not p.ok)
        witness = f"{failing.name}: {failing.witness}"
    return VerdictReport(t.id, scen.name, t.expected, observed, head.lhs, head.rhs, witness,
                         tuple((p.name, p.ok) for p in parts))


def check(theorem_id: str, scen: Scenario) -> VerdictReport:
    """Run one checker; raises HypothesisNotMet or TooLarge when it does not apply."""
    t = theorem(theorem_id)
    t.pre(scen)
    return _verdict(t, scen, t.run(scen))


def run_all(jobs: int = 1, scenarios=None, theorem_ids=None) -> list:
    """Every applicable (theorem, scenario) pair, theorem-major in canonical order."""
    scens = list(scenarios) if scenarios is not None else catalog()
    ids = [theorem(i).id for i in theorem_ids] if theorem_ids is not None else list(THEOREM_IDS)

    def per_scenario(scen):
        return {tid: check(tid, scen) for tid in ids if applicable(tid, scen)}

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(per_scenario, scens))
    else:
        results = [per_scenario(s) for s in scens]
    return [res[tid] for tid in ids for res in results if tid in res]


def to_jsonl(reports) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def format_table(reports) -> str:
    rows = [("theorem", "scenario", "observed", "expected", "status")]
    for r in reports:
        rows.append((r.theorem_id, r.scenario, r.observed, r.expected, "ok" if r.passed else "UNEXPECTED"))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows) + "\n"


__all__ = [
    "ActionBundle",
    "FAILS",
    "HOLDS",
    "HypothesisNotMet",
    "MIXED",
    "Part",
    "THEOREMS",
    "THEOREM_IDS",
    "Theorem",
    "VerdictReport",
    "applicable",
    "check",
    "format_table",
    "run_all",
    "serialize",
    "theorem",
    "to_jsonl",
]
