"""Jacobson and Baer radicals of finite-dimensional algebras, plus brute-force oracles.

Characteristic 0 (and characteristic larger than the dimension) uses the
trace form ``(x, y) -> Tr(L_{xy})``.  Characteristic ``p`` uses the chain of
characteristic-polynomial coefficients: ``I_0 = A`` and

    I_{k+1} = {x in I_k : c_{p^k}(L_{xy}) = 0 for all basis y},

where ``c_j`` is the coefficient of ``t^(n-j)`` in det(tI - L).  On the prime
field each step is a linear system.  Both routes finish by asserting that the
answer is a nilpotent two-sided ideal.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraDef,
    IdealSubspace,
    enumerate_ideals,
    enumerate_ideals_by_generators,
    ideal_nilpotency_index,
    is_prime_ideal,
    is_two_sided,
    sum_ideals,
    unitization,
)
from .linalg import Subspace, charpoly_batch, intersect_all, kernel


class RadicalAssertion(AssertionError):
    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass(frozen=True)
class RadicalReport:
    algebra: AlgebraDef
    kind: str
    value: IdealSubspace
    method: str
    nilpotency_index: int

    def to_dict(self) -> dict:
        alg = self.algebra
        return {
            "kind": self.kind,
            "method": self.method,
            "dim": self.value.dim,
            "nilpotency_index": self.nilpotency_index,
            "basis": [alg.format(row) for row in self.value.basis],
        }


_cache: "weakref.WeakKeyDictionary[AlgebraDef, tuple]" = weakref.WeakKeyDictionary()


def _trace_form_radical(alg: AlgebraDef) -> Subspace:
    f, c = alg.field, alg.structure
    traces = f.einsum("mjj->m", c)
    form = f.einsum("ijm,m->ij", c, traces)
    return kernel(f, form.T)


def _p_chain_radical(alg: AlgebraDef) -> Subspace:
    f, n, p = alg.field, alg.dim, alg.field.p
    eye = f.identity(n)
    current = alg.whole()
    q = 1
    while q <= n:
        b = current.basis
        if b.shape[0] == 0:
            break
        prods = alg.mul_many(b, eye)  # (r, n, dim): b_j * e_y
        lmats = f.einsum("ryi,ikl->rylk", prods, alg.structure).reshape(-1, n, n)
        coeff = charpoly_batch(f, lmats)[:, q].reshape(b.shape[0], n)
        rel = kernel(f, coeff.T)  # rows y, columns j
        current = Subspace(f, n, f.dot(rel.basis, b)) if rel.dim else alg.zero_space()
        q *= p
    return current


def _compute(alg: AlgebraDef):
    if alg in _cache:
        return _cache[alg]
    f = alg.field
    if not f.is_finite or f.p > alg.dim:
        space, method = _trace_form_radical(alg), "trace_form"
    else:
        space, method = _p_chain_radical(alg), "p_chain"
    if not is_two_sided(alg, space):
        raise RadicalAssertion("ideal", f"{method} result is not a two-sided ideal")
    ideal = IdealSubspace(alg, space, check=False)
    index = ideal_nilpotency_index(ideal)
    if index is None:
        raise RadicalAssertion("nilpotency", f"{method} result is not nilpotent")
    _cache[alg] = (ideal, method, index)
    return _cache[alg]


def jacobson_radical(alg: AlgebraDef) -> RadicalReport:
    ideal, method, index = _compute(alg)
    return RadicalReport(alg, "r_j", ideal, method, index)


def baer_radical(alg: AlgebraDef) -> RadicalReport:
    """In finite dimension the prime radical is the (nilpotent) Jacobson radical."""
    ideal, method, index = _compute(alg)
    return RadicalReport(alg, "r_b", ideal, method, index)


def radical(alg: AlgebraDef) -> Subspace:
    return _compute(alg)[0].space


def is_semiprime(alg: AlgebraDef) -> bool:
    return radical(alg).dim == 0


def radical_of_subalgebra(alg: AlgebraDef, space: Subspace) -> Subspace:
    """Radical of a (possibly non-unital) subalgebra, e.g. an ideal viewed as a ring.

    Computed on the unitization ``k + I``, whose radical lies inside ``I``.
    """
    if space.dim == 0:
        return space
    unital = unitization(alg, space)
    rad = radical(unital)
    if rad.dim and np.any(rad.basis[:, 0] != 0):
        raise RadicalAssertion("unitization", "radical of k+I meets the adjoined unit")
    coords = rad.basis[:, 1:]
    return Subspace(alg.field, alg.dim, alg.field.dot(coords, space.basis)) if rad.dim else Subspace.zero(alg.field, alg.dim)


# -- oracles ---------------------------------------------------------------


def _ideals(alg: AlgebraDef, enumerator: str):
    if enumerator == "subspaces":
        return enumerate_ideals(alg)
    return enumerate_ideals_by_generators(alg)


def nil_ideal_oracle(alg: AlgebraDef, enumerator: str = "subspaces") -> IdealSubspace:
    """Sum of every nilpotent ideal found by exhaustive enumeration."""
    nil = [i for i in _ideals(alg, enumerator) if ideal_nilpotency_index(i) is not None]
    return sum_ideals(alg, nil)


def spectrum_oracle(alg: AlgebraDef, enumerator: str = "subspaces"):
    """All proper prime ideals (element criterion) and their intersection."""
    primes = [i for i in _ideals(alg, enumerator) if i.is_proper() and is_prime_ideal(alg, i)]
    inter = intersect_all([p.space for p in primes], alg.field, alg.dim)
    return primes, IdealSubspace(alg, inter, check=False)
