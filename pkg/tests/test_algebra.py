import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfrad.algebra import (
    BadUnit,
    IdealSubspace,
    NonAssociative,
    NotAnIdeal,
    PNotProper,
    Quotient,
    algebra_make,
    direct_product,
    enumerate_ideals,
    enumerate_ideals_by_generators,
    ideal_generated,
    ideal_nilpotency_index,
    ideal_power,
    ideal_product,
    is_prime_by_ideals,
    is_prime_ideal,
    is_semiprime_ideal,
    matrix_algebra,
    matrix_ideal,
    prime_witness,
    tensor_algebra,
    unitization,
)
from hopfrad.catalog import catalog_algebras, matrix_ring, truncated_poly, upper_triangular
from hopfrad.field import GF2, GF3, QQ
from hopfrad.linalg import Subspace

SMALL = {k: v for k, v in catalog_algebras().items() if v.size <= 81}


def test_non_associative_tensor_is_rejected_with_witness():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 1] = 1
    c[1, 1, 0] = 1  # x*x = 1
    good = algebra_make(GF3, 2, c, [1, 0])
    assert good.is_commutative()
    bad = np.zeros((3, 3, 3), dtype=np.int64)
    for j in range(3):
        bad[0, j, j] = bad[j, 0, j] = 1
    bad[1, 2, 1] = 1
    bad[2, 1, 2] = 1
    bad[2, 2, 1] = 1
    with pytest.raises(NonAssociative) as exc:
        algebra_make(GF3, 3, bad, [1, 0, 0])
    assert len(exc.value.witness) == 3


def test_bad_unit():
    c = np.zeros((1, 1, 1), dtype=np.int64)
    c[0, 0, 0] = 1
    with pytest.raises(BadUnit):
        algebra_make(GF3, 1, c, [2])


@pytest.mark.parametrize("name", sorted(SMALL))
def test_enumerators_agree(name):
    alg = SMALL[name]
    if alg.dim > 4:
        return
    a = {i.space for i in enumerate_ideals(alg)}
    b = {i.space for i in enumerate_ideals_by_generators(alg)}
    assert a == b
    assert alg.whole() in a and alg.zero_space() in a


def test_ideals_of_dual_numbers():
    r = truncated_poly(GF3, 2)
    spaces = sorted(i.dim for i in enumerate_ideals(r))
    assert spaces == [0, 1, 2]


def test_matrix_ring_is_simple():
    for f in (GF2, GF3):
        ideals = enumerate_ideals(matrix_ring(f, 2))
        assert sorted(i.dim for i in ideals) == [0, 4]


def test_upper_triangular_primes():
    t = upper_triangular(GF3, 2)
    ideals = enumerate_ideals(t)
    primes = [i for i in ideals if i.is_proper() and is_prime_ideal(t, i)]
    assert sorted(p.dim for p in primes) == [2, 2]
    for i in ideals:
        if i.is_proper():
            assert is_prime_ideal(t, i) == is_prime_by_ideals(t, i, ideals)


def test_prime_requires_proper():
    r = truncated_poly(GF2, 2)
    with pytest.raises(PNotProper):
        prime_witness(r, IdealSubspace(r, r.whole()))


def test_not_an_ideal():
    t = upper_triangular(GF3, 2)
    with pytest.raises(NotAnIdeal):
        IdealSubspace(t, Subspace(GF3, 3, [[1, 0, 0]]))


def test_prime_witness_on_zero_ideal_of_dual_numbers():
    r = truncated_poly(GF3, 2)
    verdict, wit = prime_witness(r, IdealSubspace(r, r.zero_space()))
    assert not verdict and wit is not None
    assert not is_semiprime_ideal(r, IdealSubspace(r, r.zero_space()))


def test_nilpotency_and_powers():
    r = truncated_poly(GF2, 4)
    m = ideal_generated(r, [r.basis_vector(1)])
    assert m.dim == 3
    assert ideal_power(m, 2).dim == 2
    assert ideal_nilpotency_index(m) == 4
    assert ideal_nilpotency_index(IdealSubspace(r, r.whole())) is None


def test_quotient_algebra():
    r = truncated_poly(GF3, 3)
    i = ideal_generated(r, [r.basis_vector(2)])
    q = Quotient(r, i)
    assert q.algebra.dim == 2
    x = q.project_vec(r.basis_vector(1))
    # x^2 = 0 in the quotient
    assert not np.any(q.algebra.mul(x, x))


def test_matrix_algebra_over_algebra():
    r = truncated_poly(GF2, 2)
    m2 = matrix_algebra(r, 2)
    assert m2.dim == 8
    rad = Subspace(GF2, 2, [[0, 1]])
    mi = matrix_ideal(r, 2, rad)
    assert mi.dim == 4
    IdealSubspace(m2, mi)  # two-sided


def test_tensor_and_product_dimensions():
    a, b = truncated_poly(GF3, 2), upper_triangular(GF3, 2)
    assert tensor_algebra(a, b).dim == 6
    assert direct_product(a, b).dim == 5


def test_unitization_of_radical():
    r = truncated_poly(GF2, 3)
    rad = Subspace(GF2, 3, [[0, 1, 0], [0, 0, 1]])
    u = unitization(r, rad)
    assert u.dim == 3
    assert np.array_equal(u.unit, GF2.unit_vector(3, 0))


@given(st.sampled_from(sorted(SMALL)), st.data())
def test_element_arithmetic_is_associative_and_distributive(name, data):
    alg = SMALL[name]
    f = alg.field
    vec = st.lists(st.integers(0, f.p - 1), min_size=alg.dim, max_size=alg.dim)
    x, y, z = (alg.element(data.draw(vec)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert alg.one() * x == x == x * alg.one()


@given(st.sampled_from(sorted(SMALL)), st.data())
def test_ideal_product_inside_both(name, data):
    alg = SMALL[name]
    if alg.dim > 3:
        return
    ideals = enumerate_ideals(alg)
    i = data.draw(st.sampled_from(ideals))
    j = data.draw(st.sampled_from(ideals))
    p = ideal_product(i, j)
    assert p.space <= i.space and p.space <= j.space


def test_rational_algebra_labels_and_format():
    t = upper_triangular(QQ, 2)
    assert t.labels == ("E11", "E12", "E22")
    assert t.format(QQ.canon([0, 1, 0])) == "E12"
