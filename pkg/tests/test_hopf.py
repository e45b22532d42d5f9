import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfrad.catalog import catalog_hopf
from hopfrad.field import GF2, GF3, QQ
from hopfrad.hopf import (
    AntipodeViolation,
    CoassociativityViolation,
    ComultiplicationNotMultiplicative,
    CounitViolation,
    NotAGroup,
    antipode_squared_is_identity,
    check_group,
    cyclic_group_algebra,
    dual_hopf,
    group_algebra,
    group_table_if_dual_group_algebra,
    group_table_if_group_algebra,
    grouplikes,
    hopf_make,
    is_cocommutative,
    is_commutative,
    is_cosemisimple_hopf,
    is_semisimple_hopf,
    left_integral,
    restricted_env,
    verify_hopf,
)

HOPF = catalog_hopf()


def test_catalog_contents():
    assert len(HOPF) == 16
    for name, h in HOPF.items():
        verify_hopf(h)


def _coproduct_loop(h, x):
    """Delta on an element via explicit sums over the basis."""
    f, n = h.field, h.dim
    out = [[f.scalar(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[j][k] = f.scalar(out[j][k] + x[i] * h.delta[i, j, k])
    return out


def _mul_loop(alg, x, y):
    f, n = alg.field, alg.dim
    out = [f.scalar(0)] * n
    for i, j, k in itertools.product(range(n), repeat=3):
        out[k] = f.scalar(out[k] + x[i] * y[j] * alg.structure[i, j, k])
    return out


def _tensor_mul(alg, u, v):
    f, n = alg.field, alg.dim
    out = [[f.scalar(0)] * n for _ in range(n)]
    for a, b, c, d in itertools.product(range(n), repeat=4):
        coef = u[a][b] * v[c][d]
        if coef == 0:
            continue
        left = alg.structure[a, c]
        right = alg.structure[b, d]
        for p, q in itertools.product(range(n), repeat=2):
            out[p][q] = f.scalar(out[p][q] + coef * left[p] * right[q])
    return out


@given(st.sampled_from(sorted(HOPF)), st.data())
def test_delta_multiplicative_by_loops(name, data):
    h = HOPF[name]
    f = h.field
    scal = st.integers(-3, 3) if not f.is_finite else st.integers(0, f.p - 1)
    x = [f.scalar(v) for v in data.draw(st.lists(scal, min_size=h.dim, max_size=h.dim))]
    y = [f.scalar(v) for v in data.draw(st.lists(scal, min_size=h.dim, max_size=h.dim))]
    xy = _mul_loop(h.algebra, x, y)
    assert _coproduct_loop(h, xy) == _tensor_mul(h.algebra, _coproduct_loop(h, x), _coproduct_loop(h, y))


@pytest.mark.parametrize("name", sorted(HOPF))
def test_double_dual_is_identity(name):
    h = HOPF[name]
    dd = dual_hopf(dual_hopf(h))
    assert np.array_equal(dd.algebra.structure, h.algebra.structure)
    assert np.array_equal(dd.delta, h.delta)
    assert np.array_equal(dd.antipode, h.antipode)


@pytest.mark.parametrize("name", sorted(HOPF))
def test_cosemisimple_means_dual_semisimple(name):
    h = HOPF[name]
    assert is_cosemisimple_hopf(h) == is_semisimple_hopf(dual_hopf(h))
    assert is_commutative(h) == is_cocommutative(dual_hopf(h))
    # finite dimensional and (co)commutative here, so S^2 = id
    assert antipode_squared_is_identity(h)


@pytest.mark.parametrize("f", [GF2, GF3, QQ], ids=str)
@pytest.mark.parametrize("n", [2, 3])
def test_maschke(f, n):
    h = cyclic_group_algebra(f, n)
    assert is_semisimple_hopf(h) == (not f.is_finite or n % f.p != 0)
    assert is_cosemisimple_hopf(h)
    assert left_integral(h).dim == 1


def test_restricted_env_flags():
    for f in (GF2, GF3):
        assert is_semisimple_hopf(restricted_env(f, 1))
        assert not is_semisimple_hopf(restricted_env(f, 0))
        for lam in (0, 1):
            h = restricted_env(f, lam)
            assert is_commutative(h) and is_cocommutative(h)
            assert not is_cosemisimple_hopf(h)
    with pytest.raises(ValueError):
        restricted_env(QQ)


def test_grouplikes_and_tables():
    h = cyclic_group_algebra(GF3, 3)
    assert len(grouplikes(h)) == 3
    assert group_table_if_group_algebra(h) == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert group_table_if_dual_group_algebra(dual_hopf(h)) is not None
    assert group_table_if_group_algebra(restricted_env(GF3, 1)) is None
    assert len(grouplikes(restricted_env(GF2, 1))) == 1


def test_klein_four_group():
    table = [[a ^ b for b in range(4)] for a in range(4)]
    h = group_algebra(GF3, table)
    verify_hopf(h)
    assert is_semisimple_hopf(h)


def test_bad_group_tables():
    with pytest.raises(NotAGroup):
        check_group([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        check_group([[0, 2], [1, 0]])


def _perturbed(h, which):
    alg, d, e, s = h.algebra, h.delta.copy(), h.counit.copy(), h.antipode.copy()
    f = h.field
    if which == "delta":
        d[1, 1, 0] = f.scalar(d[1, 1, 0] + 1)
    elif which == "counit":
        e[1] = f.scalar(e[1] + 1)
    elif which == "antipode":
        s[1, 1] = f.scalar(s[1, 1] + 1)
    return alg, d, e, s


@pytest.mark.parametrize(
    "which,exc",
    [
        ("delta", (CoassociativityViolation, CounitViolation, ComultiplicationNotMultiplicative)),
        ("counit", (CounitViolation,)),
        ("antipode", (AntipodeViolation,)),
    ],
)
def test_axiom_violations_are_caught(which, exc):
    h = cyclic_group_algebra(GF3, 3)
    with pytest.raises(exc) as info:
        hopf_make(*_perturbed(h, which))
    assert info.value.witness is not None
