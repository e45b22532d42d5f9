import io
import json
import subprocess
import sys

import pytest

from hopfrad import cli
from hopfrad.catalog import SCENARIO_NAMES, scenario
from hopfrad.document import emit_scenario


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def docs(tmp_path_factory):
    root = tmp_path_factory.mktemp("docs")
    code, out, _ = run("catalog", "--emit", str(root))
    assert code == 0
    assert len(out.splitlines()) == len(SCENARIO_NAMES)
    return root


def test_verify(docs):
    code, out, _ = run("verify", str(docs / "scen6-inner-m2.json"))
    assert code == 0 and out.startswith("ok:")


def test_radical_rb(docs):
    code, out, _ = run("radical", str(docs / "scen1-p2.json"), "--kind", "rb")
    assert code == 0
    assert "nilpotency_index: 2" in out
    assert out.rstrip().endswith("x")


@pytest.mark.parametrize("kind", cli.RADICAL_KINDS)
def test_every_radical_kind(docs, kind):
    code, out, _ = run("radical", str(docs / "scen3-kc2-gf3.json"), "--kind", kind)
    assert code == 0 and "dim:" in out


def test_cross(docs):
    code, out, _ = run("cross", str(docs / "scen1-p2.json"))
    assert code == 0 and "dim 4" in out
    code, out, _ = run("cross", str(docs / "scen1-p2.json"), "--double")
    assert code == 0 and "dim 8" in out


def test_check_single_counterexample():
    code, out, _ = run("check", "--theorem", "E10410", "--scenario", "scen1-p2")
    assert code == 0
    assert out.splitlines()[0] == "E10410 on scen1-p2: identity_fails (expected)"
    assert out.splitlines()[1].startswith("witness:")


def test_check_json_from_document(docs):
    code, out, _ = run("check", "--theorem", "P1025", "--scenario", "scen3-kc2-gf3", "--doc", str(docs / "scen3-kc2-gf3.json"), "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["observed"] == "identity_holds"


def test_check_all_on_document(docs):
    code, out, _ = run("check", "--all", "--doc", str(docs / "scen5a-trivial-kc2-gf2.json"))
    assert code == 0 and out.rstrip().endswith("0 unexpected")


def test_parse_error_exit_code(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"format_version": "1",\n  "field": }\n')
    code, _, err = run("verify", str(p))
    assert code == 2 and "line 2" in err


def test_missing_file_and_unknown_names(tmp_path):
    assert run("verify", str(tmp_path / "nope.json"))[0] == 2
    assert run("check", "--theorem", "T0000", "--scenario", "scen1-p2")[0] == 2
    assert run("check", "--theorem", "E10410", "--scenario", "nope")[0] == 2
    assert run("check", "--theorem", "E10410")[0] == 2


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        run("radical")
    assert info.value.code == 2


def test_axiom_violation_exit_code(tmp_path):
    doc = json.loads(emit_scenario(scenario("scen3-kc2-gf3")))
    # drop g.1 = 1 so the action no longer measures the unit
    doc["actions"]["act"]["act"].remove([1, 0, 0, "1"])
    p = tmp_path / "bad_action.json"
    p.write_text(json.dumps(doc))
    code, _, err = run("verify", str(p))
    assert code == 3 and "axiom violation" in err


def test_too_large_exit_code(docs):
    code, _, err = run("radical", str(docs / "scen2-p3.json"), "--kind", "wH")
    assert code == 4 and "too large" in err


def test_hypothesis_exit_code():
    code, _, err = run("check", "--theorem", "T1026", "--scenario", "scen1-p2")
    assert code == 5 and "hypothesis" in err


def test_unexpected_verdict_exit_code(monkeypatch):
    import dataclasses

    from hopfrad import theorems

    t = theorems.theorem("P1025")
    flipped = dataclasses.replace(t, expected=theorems.FAILS)
    monkeypatch.setattr(theorems, "THEOREMS", tuple(flipped if x.id == "P1025" else x for x in theorems.THEOREMS))
    code, out, _ = run("check", "--theorem", "P1025", "--scenario", "scen3-kc2-gf3")
    assert code == 6 and "UNEXPECTED" in out


def test_catalog_list():
    code, out, _ = run("catalog", "--list")
    assert code == 0
    assert [ln.split()[0] for ln in out.splitlines()] == list(SCENARIO_NAMES)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hopfrad", "check", "--theorem", "T1026", "--scenario", "scen6-inner-m2"],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert "identity_holds (expected)" in res.stdout
