"""Verification scenarios, cache behavior, and the command line."""

from __future__ import annotations

import json

import pytest

from gchom.cache import Cache, Config
from gchom.cli import main
from gchom.verify import SCENARIOS, run


def test_registry_and_unknown_scenario():
    assert len(SCENARIOS) == 13
    with pytest.raises(KeyError):
        run("nosuch")


def test_weight1_scenario_passes():
    report = run("weight1_tables", params={"g_max": 3}, config=Config(cache_dir=None))
    assert report.status == "PASS"
    doc = report.to_json()
    assert doc["schema"] == "gchom-report@1"
    assert all("provenance" in c for c in doc["checks"])
    assert all(
        any(tag in c["provenance"] for tag in ("PAPER", "TRIVIAL", "DERIVED", "SKIPPED"))
        for c in doc["checks"]
    )


def test_reports_are_idempotent(tmp_path):
    cfg = Config(cache_dir=tmp_path / "cache")
    a = run("ideal_cohomology", params={"w_max": 2}, config=cfg).to_json()
    b = run("ideal_cohomology", params={"w_max": 2}, config=cfg).to_json()
    a.pop("elapsed_s"), b.pop("elapsed_s")
    a.pop("cache"), b.pop("cache")
    assert a == b


def test_cache_round_trip(tmp_path):
    cache = Cache(tmp_path / "c")
    payload = {"strata": {"0": ["v1;1;;;0:l0"]}, "n": 3}
    cache.put("basis", {"x": 1}, payload)
    assert cache.get("basis", {"x": 1}) == payload
    assert cache.get("basis", {"x": 2}) is None
    # corrupted payloads are rejected
    key = cache.key_of("basis", {"x": 1})
    path = cache._path(key)
    doc = json.loads(path.read_text())
    doc["payload"]["n"] = 4
    path.write_text(json.dumps(doc))
    assert cache.get("basis", {"x": 1}) is None


def test_cold_vs_warm_outputs_identical(tmp_path, capsys):
    args = ["cohomology", "--variant", "gc1tp", "--g", "2", "--parity", "odd",
            "--W", "1", "--m", "1", "--cache-dir", str(tmp_path / "c")]
    assert main(args) == 0
    cold = capsys.readouterr().out
    assert main(args) == 0
    warm = capsys.readouterr().out
    assert cold == warm


def test_cli_basis_summary(capsys):
    rc = main(["basis", "--variant", "gc1tp", "--g", "3", "--parity", "odd",
               "--W", "1", "--summary", "--no-cache"])
    assert rc == 0
    out = capsys.readouterr().out.strip()
    assert out == "E=0: 20, E=1: 6"


def test_cli_basis_empty(capsys):
    rc = main(["basis", "--variant", "gc1", "--g", "0", "--parity", "odd",
               "--W", "1", "--summary", "--no-cache"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "(empty)"


def test_cli_stable_family(capsys):
    rc = main(["basis", "--family", "j", "--M", "2", "--W", "0", "--summary",
               "--no-cache"])
    assert rc == 0
    assert "E=0: 1" in capsys.readouterr().out


def test_cli_cohomology_degree_shift(capsys):
    base = ["cohomology", "--variant", "gc1tp", "--g", "3", "--parity", "odd",
            "--W", "1", "--no-cache"]
    assert main(base + ["--m", "1"]) == 0
    assert capsys.readouterr().out.strip() == "degree 0: 14"
    assert main(base + ["--m", "3"]) == 0
    assert capsys.readouterr().out.strip() == "degree -2: 14"
    assert main(base + ["--m", "1", "--e-number"]) == 0
    assert capsys.readouterr().out.strip() == "E=0: 14"


def test_cli_verify_pass_and_json(capsys):
    rc = main(["verify", "weight1_tables", "--params", '{"g_max": 2}',
               "--json", "--no-cache"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "PASS"


def test_cli_verify_unknown_name_fails():
    with pytest.raises(SystemExit):
        main(["verify", "nosuch", "--no-cache"])


def test_cli_table(capsys):
    assert main(["table", "weight1", "--parity", "even", "--g-max", "2",
                 "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "gc1tp" in out and "g=2" in out
    assert main(["table", "gr2", "--parity", "odd", "--csv", "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "V(2,2)" in out
