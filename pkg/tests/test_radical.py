import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfrad.algebra import IdealSubspace, Quotient, ideal_nilpotency_index, tensor_algebra
from hopfrad.catalog import catalog, catalog_algebras, matrix_ring, truncated_poly, upper_triangular
from hopfrad.field import GF2, GF3, QQ
from hopfrad.radical import (
    baer_radical,
    is_semiprime,
    jacobson_radical,
    nil_ideal_oracle,
    radical,
    radical_of_subalgebra,
    spectrum_oracle,
)

ALGS = catalog_algebras()


def quasi_regular_radical(alg):
    """x is in J(A) iff 1 - y x is invertible for every y (brute force)."""
    f, p = alg.field, alg.field.p
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=alg.dim)]
    one = alg.unit
    members = []
    for x in vecs:
        ok = True
        for y in vecs:
            z = f.canon(one - alg.mul(y, x))
            lm = f.einsum("i,ijk->kj", z, alg.structure)
            if sympy.Matrix(lm.tolist()).det() % p == 0:
                ok = False
                break
        if ok:
            members.append(x)
    return members


@pytest.mark.parametrize("name", sorted(n for n, a in ALGS.items() if a.size <= 81))
def test_jacobson_matches_quasi_regular_elements(name):
    alg = ALGS[name]
    rad = jacobson_radical(alg).value.space
    members = quasi_regular_radical(alg)
    assert len(members) == alg.field.p ** rad.dim
    assert all(rad.contains(x) for x in members)


@pytest.mark.parametrize("name", sorted(ALGS))
def test_radical_equals_oracles(name):
    alg = ALGS[name]
    rad = jacobson_radical(alg).value.space
    assert baer_radical(alg).value.space == rad
    assert nil_ideal_oracle(alg, "generators").space == rad
    assert spectrum_oracle(alg, "generators")[1].space == rad


@pytest.mark.parametrize("name", sorted(ALGS))
def test_idempotent_and_nilpotent(name):
    alg = ALGS[name]
    rep = jacobson_radical(alg)
    assert rep.nilpotency_index == ideal_nilpotency_index(rep.value)
    if rep.value.is_proper():
        q = Quotient(alg, rep.value)
        assert radical(q.algebra).dim == 0


def test_known_radicals():
    assert radical(truncated_poly(GF3, 3)).dim == 2
    assert radical(matrix_ring(GF2, 2)).dim == 0
    t = upper_triangular(QQ, 2)
    r = radical(t)
    assert r.dim == 1 and r.contains(QQ.canon([0, 1, 0]))
    assert not is_semiprime(t) and is_semiprime(matrix_ring(QQ, 2))


def test_report_dict():
    d = jacobson_radical(truncated_poly(GF2, 3)).to_dict()
    assert d["dim"] == 2 and d["nilpotency_index"] == 3 and d["basis"] == ["x", "x^2"]


def test_tensor_products():
    # GF(4) is separable over GF(2); kC2 (x) kC2 = kC2xC2 has a 3-dim augmentation radical in char 2
    gf4 = ALGS["gf4"]
    assert radical(tensor_algebra(gf4, gf4)).dim == 0
    k = ALGS["kC2/gf2"]
    assert radical(tensor_algebra(k, k)).dim == 3


def test_radical_of_subalgebra():
    t = upper_triangular(GF3, 2)
    diag = t.zero_space() + type(t.whole())(GF3, 3, [[1, 0, 0], [0, 0, 1]])
    assert radical_of_subalgebra(t, diag).dim == 0
    assert radical_of_subalgebra(t, t.whole()) == radical(t)


@pytest.mark.parametrize("scen", [s for s in catalog() if s.cp.algebra.dim <= 27], ids=lambda s: s.name)
def test_crossed_products_up_to_dim_27(scen):
    alg = scen.cp.algebra
    rep = jacobson_radical(alg)
    if rep.value.dim:
        assert ideal_nilpotency_index(rep.value) == rep.nilpotency_index
    if rep.value.is_proper():
        assert radical(Quotient(alg, rep.value).algebra).dim == 0


@settings(max_examples=25)
@given(st.sampled_from(sorted(n for n, a in ALGS.items() if a.dim <= 3)), st.sampled_from(sorted(n for n, a in ALGS.items() if a.dim <= 2)))
def test_radical_of_product_is_product_of_radicals(a, b):
    from hopfrad.algebra import direct_product

    A, B = ALGS[a], ALGS[b]
    if A.field is not B.field:
        return
    assert radical(direct_product(A, B)).dim == radical(A).dim + radical(B).dim
