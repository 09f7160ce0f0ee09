import json
import subprocess
import sys

import pytest

from sylowscope import claims
from sylowscope.cli import main
from sylowscope.config import Config, get_config, set_config


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "sylowscope", *args],
                          capture_output=True, text=True)


def test_claim_evidence_is_byte_identical():
    for cid in ("gl2_3-pair", "regular-b", "thm-3.1-instances"):
        a = claims.run_claim(cid).to_json(with_duration=False)
        b = claims.run_claim(cid).to_json(with_duration=False)
        assert a["status"] == "PASS"
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_unknown_claim():
    with pytest.raises(KeyError):
        claims.run_claim("nonexistent")
    assert main(["verify", "--claim", "nonexistent"]) == 3


def test_every_claim_has_an_anchor():
    ids = [cid for cid, _ in claims.list_claims()]
    assert "degree-le-6" in ids and "census-psl2_11" in ids
    assert all(anchor for _, anchor in claims.list_claims())


def test_cap_exceeded_gives_skipped():
    old = get_config()
    set_config(Config(enumeration_cap=10))
    try:
        r = claims.run_claim("gl2_3-pair")
    finally:
        set_config(old)
    assert r.status == claims.SKIPPED and "CapExceededError" in r.reason


def test_failing_check_gives_fail_with_counterexample():
    @claims.claim("_always-false", "test fixture")
    def _bad(ck):
        ck.check("ok", True)
        ck.equal("arithmetic", 2 + 2, 5)
    try:
        r = claims.run_claim("_always-false")
        assert r.status == claims.FAIL
        assert r.evidence["counterexample"]["check"] == "arithmetic"
        assert main(["verify", "--claim", "_always-false"]) == 1
    finally:
        del claims.REGISTRY["_always-false"]


def test_skip_only_exit_code(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"enumeration_cap": 10}))
    old = get_config()
    try:
        assert main(["--config", str(cfg), "verify", "--claim", "gl2_3-pair"]) == 2
    finally:
        set_config(old)


def test_bad_config_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    assert main(["--config", str(cfg), "catalog", "list"]) == 3


def test_cli_verify_json(tmp_path):
    out = tmp_path / "v.json"
    r = run_cli("verify", "--claim", "gl2_3-pair", "--json", str(out))
    assert r.returncode == 0, r.stderr
    data = json.loads(out.read_text())
    assert data["id"] == "gl2_3-pair" and data["status"] == "PASS"
    assert "duration_seconds" in data


def test_cli_usage_errors():
    assert run_cli("bogus").returncode == 3
    assert run_cli("search", "--degree", "9").returncode == 3
    assert run_cli("classify", "--group", "gl2_3", "--u", "U", "--v", "Z").returncode == 3
    assert run_cli("census", "--poly", "/no/such/file.json").returncode == 3


def test_cli_catalog_and_classify(tmp_path):
    r = run_cli("catalog", "list", "--json", "-")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert {"id": "gl2_3", "name": "GL(2,3)", "order": 48, "degree": 8} in rows
    out = tmp_path / "c.json"
    r = run_cli("classify", "--group", "psl_3_2", "--u", "U", "--v", "V", "--json", str(out))
    assert r.returncode == 0
    d = json.loads(out.read_text())
    assert d["gassmann"] and d["sylow_conjugate"] and not d["conjugate"]


def test_cli_search_and_census(tmp_path):
    r = run_cli("search", "--degree", "4")
    assert r.returncode == 0 and "pairs: 0" in r.stdout
    out = tmp_path / "census.json"
    r = run_cli("census", "--poly", "p7", "--pmax", "200", "--per-prime", "--json", str(out))
    assert r.returncode == 0
    d = json.loads(out.read_text())
    assert d["polynomial"] == "p7" and d["pmax"] == 200 and "patterns" in d
