"""Report assembly and command-line interface.

Oracle: reports are rebuilt from scratch and compared byte-for-byte,
and every CLI path is driven through ``main`` with exit codes and
parsed output checked against the library API directly.
"""

import json

import pytest

from bridgevar.cli import main
from bridgevar.knotprops import HYPERBOLIC, TREFOIL, UNKNOT
from bridgevar.report import build_report, render_text, to_json

SECTIONS = ("knot", "classification", "models", "two_bridge", "smoothness",
            "component_count", "genus_Y", "genus_X", "odd_points",
            "alexander", "trace_field", "commensurability")


# --- report structure -----------------------------------------------------

def test_report_sections_and_routes():
    rep = build_report(4, 6)
    assert rep["schema"] == 1
    for key in SECTIONS:
        assert key in rep, key
    assert "timing" in rep
    routes = {v["route"] for v in rep.values()
              if isinstance(v, dict) and "route" in v}
    assert routes <= {"formula", "oracle", "both-agree"}
    assert rep["smoothness"]["route"] == "oracle"
    assert rep["alexander"]["route"] == "formula"
    assert rep["two_bridge"]["route"] == "both-agree"


def test_report_json_is_deterministic_and_untimed():
    a, b = to_json(build_report(4, 6)), to_json(build_report(4, 6))
    assert a == b
    data = json.loads(a)
    assert "timing" not in data and data["schema"] == 1
    assert data["knot"] == {"k": 4, "l": 6, "model_k": 4, "model_l": 6,
                            "normalized": True, "moves": []}


def test_report_degenerate_inputs_do_not_raise():
    trefoil = build_report(2, 2)
    assert trefoil["classification"] == TREFOIL
    assert "refused" in trefoil["smoothness"]
    assert trefoil["component_count"]["degenerate"]

    unknot = build_report(0, 4)
    assert unknot["classification"] == UNKNOT
    assert "unavailable" in unknot["two_bridge"]
    assert unknot["alexander"]["fibered"] is True

    not_knot = build_report(3, 3)
    assert "unavailable" in not_knot["two_bridge"]
    json.loads(to_json(not_knot))  # still serializes


def test_report_split_models_for_k_equals_l():
    rep = build_report(4, 4)
    assert "D_split" in rep["models"]
    assert len(rep["models"]["D_split"]) == 2
    assert rep["smoothness"]["component_intersection"]["count"] == 2


def test_render_text_contains_key_lines():
    text = render_text(build_report(2, -2))
    assert "classification: Hyperbolic" in text
    assert "schema: 1" in text
    assert text.endswith("\n")


# --- CLI ----------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_analyze_json_matches_library(capsys):
    code, out, _ = run(capsys, "analyze", "-k", "2", "-l", "-2", "--json")
    assert code == 0
    assert out == to_json(build_report(2, -2))


def test_cli_analyze_text_mode(capsys):
    code, out, _ = run(capsys, "analyze", "-k", "2", "-l", "-2")
    assert code == 0
    assert out == render_text(build_report(2, -2))


def test_cli_exit_codes(capsys):
    code, _, err = run(capsys, "tracefield", "-k", "2", "-l", "2")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "sweep", "--kmax", "1", "--lmax", "4")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "-k", "2"])  # missing -l
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "nosuchsuite"])
    capsys.readouterr()


def test_cli_model_and_tracefield(capsys):
    code, out, _ = run(capsys, "model", "-k", "4", "-l", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["D"]["state"] == "curve" and len(data["D_split"]) == 2

    code, out, _ = run(capsys, "tracefield", "-k", "2", "-l", "-2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == 2 and data["analysis"]["verdict"] == "irreducible"


def test_cli_newton_matches_expected(capsys):
    code, out, _ = run(capsys, "newton", "--variant", "one", "-n", "4",
                       "-p", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["matches_expected"] is True
    assert data["vertices"][0] == [0, "inf"]

    code, out, _ = run(capsys, "newton", "--variant", "alpha", "-n", "6",
                       "--json")
    assert code == 0
    assert json.loads(out)["matches_expected"] is True


def test_cli_commensurability(capsys):
    code, out, _ = run(capsys, "commensurability", "-k", "2", "-l", "4",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NotCommensurable"
    assert data["witness"]["type"] == "reducible-point"


def test_cli_verify_suites_pass(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--range", "8")
    assert code == 0
    assert "FAIL" not in out and "pass" in out

    code, out, _ = run(capsys, "verify", "riley", "--kmax", "3",
                       "--nmax", "2", "--seed", "7")
    assert code == 0 and "FAIL" not in out


def test_cli_verify_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BRIDGEVAR_SEED", "override-seed")
    code, out, _ = run(capsys, "verify", "riley", "--kmax", "2",
                       "--nmax", "1")
    assert code == 0 and "FAIL" not in out


# --- sweep ----------------------------------------------------------------------

def test_sweep_rows_deterministic_serial_vs_parallel(tmp_path, capsys):
    serial, parallel = tmp_path / "s.jsonl", tmp_path / "p.jsonl"
    code, _, err = run(capsys, "sweep", "--kmax", "2", "--lmax", "2",
                       "--jobs", "1", "--out", str(serial))
    assert code == 0 and "0 with failures" in err
    code, _, _ = run(capsys, "sweep", "--kmax", "2", "--lmax", "2",
                     "--jobs", "2", "--out", str(parallel))
    assert code == 0
    assert serial.read_bytes() == parallel.read_bytes()

    rows = [json.loads(line) for line in serial.read_text().splitlines()]
    # k, l in [-2, 2]^2 minus the 4 odd-odd pairs
    assert len(rows) == 21
    by_kl = {(r["k"], r["l"]): r for r in rows}
    assert by_kl[(2, -2)]["classification"] == HYPERBOLIC
    assert by_kl[(2, -2)]["genus_X"] == {"X0": 1}
    assert by_kl[(2, -2)]["fibered"] is True
    assert by_kl[(2, 2)]["classification"] == TREFOIL
    assert all(not r.get("disagreements") and "error" not in r for r in rows)


def test_sweep_stdout_mode(capsys):
    code, out, err = run(capsys, "sweep", "--kmax", "2", "--lmax", "2",
                         "--jobs", "1")
    assert code == 0
    assert len(out.splitlines()) == 21
    assert "21 rows" in err
