import json

import pytest

from hopfrad.algebra import TooLarge
from hopfrad.catalog import catalog, scenario
from hopfrad.theorems import (
    FAILS,
    HOLDS,
    MIXED,
    THEOREM_IDS,
    HypothesisNotMet,
    Part,
    VerdictReport,
    applicable,
    check,
    format_table,
    run_all,
    theorem,
    to_jsonl,
)


@pytest.fixture(scope="module")
def reports():
    return run_all(jobs=4)


def test_no_unexpected_verdicts(reports):
    bad = [(r.theorem_id, r.scenario, r.witness) for r in reports if not r.passed]
    assert bad == []


def test_every_theorem_runs_somewhere(reports):
    assert {r.theorem_id for r in reports} == set(THEOREM_IDS)


def test_counterexample_is_the_only_failure(reports):
    fails = {(r.theorem_id, r.scenario) for r in reports if r.observed == FAILS}
    assert fails == {("E10410", "scen1-p2"), ("E10410", "scen2-p3")}
    assert all(r.observed == HOLDS for r in reports if r.theorem_id != "E10410")


def test_canonical_order(reports):
    names = [s.name for s in catalog()]
    keys = [(THEOREM_IDS.index(r.theorem_id), names.index(r.scenario)) for r in reports]
    assert keys == sorted(keys)


def test_hypothesis_not_met():
    with pytest.raises(HypothesisNotMet):
        check("T1026", scenario("scen1-p2"))
    with pytest.raises(HypothesisNotMet):
        check("E10410", scenario("scen3-kc2-gf3"))
    assert not applicable("T1057", scenario("scen3-kc2-gf3"))


def test_too_large_precondition():
    with pytest.raises(TooLarge):
        check("T1015", scenario("scen2-p3"))


def test_alias():
    assert theorem("L1023") is theorem("L1022")
    with pytest.raises(KeyError):
        theorem("T9999")


def test_report_serialization():
    r = check("E10410", scenario("scen1-p2"))
    d = json.loads(r.to_json())
    assert d["observed"] == FAILS and d["expected"] == FAILS
    assert set(d) == {"theorem_id", "scenario", "expected", "observed", "lhs", "rhs", "witness", "parts"}
    assert d["lhs"]["dim"] != d["rhs"]["dim"]
    assert to_jsonl([r]).count("\n") == 1
    assert "E10410" in format_table([r])


def test_mixed_verdict_reported():
    from hopfrad.theorems import _verdict

    t = theorem("P1024")
    parts = [Part("a", True), Part("b", False, witness="w")]
    v = _verdict(t, scenario("scen1-p2"), parts)
    assert v.observed == MIXED and not v.passed and v.witness == "w"
