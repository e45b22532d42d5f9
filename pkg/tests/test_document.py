import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfrad.action import ActionError
from hopfrad.algebra import NonAssociative
from hopfrad.catalog import catalog, scenario
from hopfrad.document import DocumentError, emit, emit_scenario, from_sparse, loads, scenario_document, to_sparse
from hopfrad.field import GF3, QQ

CATALOG = catalog()


@pytest.mark.parametrize("scen", CATALOG, ids=lambda s: s.name)
def test_round_trip_is_byte_stable(scen):
    text = emit_scenario(scen)
    back = loads(text).scenario()
    assert emit_scenario(back) == text
    assert back.tags == scen.tags
    assert np.array_equal(back.bundle.act, scen.bundle.act)


@given(st.lists(st.fractions(max_denominator=50), min_size=4, max_size=4))
def test_rational_scalars_round_trip(values):
    arr = QQ.canon(np.array(values, dtype=object).reshape(2, 2))
    sparse = to_sparse(QQ, arr)
    assert np.array_equal(from_sparse(QQ, sparse, (2, 2), "$"), arr)
    # the string is the canonical form and survives a JSON round trip unchanged
    assert json.loads(json.dumps(sparse)) == sparse


def test_non_canonical_scalar_is_normalized():
    assert from_sparse(GF3, [[0, "-1"]], (1,), "$")[0] == 2
    assert to_sparse(GF3, GF3.canon([5])) == [[0, "2"]]


def test_syntax_error_has_position():
    text = emit_scenario(CATALOG[0])
    broken = text.replace('"format_version"', '"format_version', 1)
    with pytest.raises(DocumentError) as info:
        loads(broken)
    assert info.value.line is not None and info.value.column is not None


@pytest.mark.parametrize(
    "mutate,where",
    [
        (lambda d: d.pop("field"), "$"),
        (lambda d: d.update(format_version="2"), "$.format_version"),
        (lambda d: d["algebras"]["R"].update(dim=0), "$.algebras.R.dim"),
        (lambda d: d["algebras"]["R"]["structure"].append([9, 0, 0, "1"]), "$.algebras.R.structure[0]"),
        (lambda d: d["scenarios"][next(iter(d["scenarios"]))].update(action="nope"), ".action"),
    ],
)
def test_structural_errors_have_paths(mutate, where):
    d = scenario_document(CATALOG[0])
    mutate(d)
    with pytest.raises(DocumentError) as info:
        loads(emit(d))
    assert info.value.path is not None
    assert where.split("[")[0] in info.value.path


def test_non_associative_structure_is_an_axiom_violation():
    d = scenario_document(scenario("scen3-kc2-gf3"))
    # basis 1, a, b with a*a = b, a*b = a: (a a) b = 0 but a (a b) = b
    structure = [[0, j, j, "1"] for j in range(3)] + [[j, 0, j, "1"] for j in (1, 2)]
    structure += [[1, 1, 2, "1"], [1, 2, 1, "1"]]
    d["algebras"]["N"] = {"dim": 3, "labels": ["1", "a", "b"], "unit": [[0, "1"]], "structure": sorted(structure)}
    with pytest.raises(NonAssociative) as info:
        loads(emit(d))
    assert info.value.witness is not None


def test_bad_action_is_an_axiom_violation():
    d = scenario_document(scenario("scen3-kc2-gf3"))
    d["actions"]["act"]["act"] = [e for e in d["actions"]["act"]["act"] if e[:3] != [1, 0, 0]]
    with pytest.raises(ActionError):
        loads(emit(d))


def test_inner_unit_must_match():
    d = scenario_document(scenario("scen6-inner-m2"))
    name = next(iter(d["scenarios"]))
    d["scenarios"][name]["inner_unit"] = [[0, 0, "1"], [0, 3, "1"], [1, 0, "1"], [1, 3, "1"]]
    with pytest.raises(ActionError):
        loads(emit(d))


def test_multi_scenario_document_needs_a_name():
    d = scenario_document(CATALOG[0])
    d["scenarios"]["copy"] = dict(d["scenarios"][CATALOG[0].name])
    doc = loads(emit(d))
    with pytest.raises(KeyError):
        doc.scenario()
    assert doc.scenario("copy").name == "copy"


def test_twisted_scenario_keeps_cocycle():
    scen = scenario("scen7-twisted-gf9")
    d = scenario_document(scen)
    assert d["cocycles"]["sigma"]["sigma"]
    assert not loads(emit(d)).scenario().bundle.has_trivial_sigma()
