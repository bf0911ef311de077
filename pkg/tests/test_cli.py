"""Command line interface: envelopes, renderings, exit codes."""

import json
import subprocess
import sys

import pytest

from circulant import cli
from golden import SWEEP_54_COLUMNS, SWEEP_54_ROWS


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 0, err
    assert err == ""
    return json.loads(out)


def test_reduce_envelope(capsys):
    d = run_json(capsys, ["reduce", "--n", "54", "--set", "2,3,16,20,34,38,51,52"])
    assert d["command"] == "reduce"
    assert d["inputs"] == {"n": 54, "values": [2, 3, 16, 20, 34, 38, 51, 52]}
    assert d["result"] == {"n": 54, "jumps": [2, 3, 16, 20]}
    assert d["findings"] == []


def test_output_is_deterministic(capsys):
    argv = ["t2set", "--n", "16", "--m", "2", "--set", "1,2,7"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_t1set_lists_orbit_and_group(capsys):
    d = run_json(capsys, ["t1set", "--n", "54", "--set", "1,17,18,19"])
    members = d["result"]["members"]
    assert [m["jumps"] for m in members] == [
        [1, 17, 18, 19],
        [5, 13, 18, 23],
        [7, 11, 18, 25],
    ]
    assert members[0]["multipliers"] == [1, 17, 19, 35, 37, 53]
    group = d["result"]["group"]
    assert group["order"] == 3
    assert group["representatives"] == [1, 5, 7]


def test_t2set_reports_members_indices_and_group(capsys):
    d = run_json(capsys, ["t2set", "--n", "16", "--m", "2", "--set", "1,2,7"])
    r = d["result"]
    assert [m["jumps"] for m in r["members"]] == [[1, 2, 7], [2, 3, 5]]
    assert r["t2_indices"] == [0, 2, 4, 6]
    assert r["graph_period"] == 4
    assert r["group"]["modulus"] == 8
    assert r["group"]["generator"] == 2
    assert r["group"]["order"] == 2
    assert [lab["jumps"] for lab in r["group"]["labels"]] == [
        [1, 2, 7],
        [2, 3, 5],
        [1, 2, 7],
        [2, 3, 5],
    ]


def test_vset_sweep_has_no_non_circulant_rows_at_27(capsys):
    d = run_json(capsys, ["vset", "--n", "27", "--m", "3", "--set", "1,3,8,10"])
    r = d["result"]
    assert len(r["rows"]) == 9
    assert {row["verdict"] for row in r["rows"]} == {"Identity", "Type2"}
    assert r["graph_period"] == 3
    assert [g["jumps"] for g in r["distinct"]] == [
        [1, 3, 8, 10],
        [3, 4, 5, 13],
        [2, 3, 7, 11],
    ]


def test_table_json_matches_the_reference_sweep(capsys):
    d = run_json(capsys, ["table", "--n", "54", "--m", "3", "--set", "2,3,16,20"])
    r = d["result"]
    assert tuple(r["columns"]) == SWEEP_54_COLUMNS
    by_t = {row["t"]: row for row in r["rows"]}
    assert len(by_t) == 18
    for t, values, display in SWEEP_54_ROWS:
        assert tuple(by_t[t]["values"]) == values, t
        assert by_t[t]["display"] == display, t
    assert by_t[2]["image"] == [3, 4, 14, 22]
    assert by_t[4]["image"] == [3, 8, 10, 26]


def test_table_rendering_shows_display_strings(capsys):
    code, out, err = run(
        capsys,
        ["table", "--n", "54", "--m", "3", "--set", "2,3,16,20", "--format", "table"],
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["t"] + [str(c) for c in SWEEP_54_COLUMNS] + [
        "circulant?"
    ]
    assert "Yes (Type-2)" in out
    assert "Yes (Identity)" in out
    assert "NS" in out


def test_table_honours_step_selection(capsys):
    d = run_json(
        capsys,
        ["table", "--n", "54", "--m", "3", "--set", "2,3,16,20", "--t", "0..3"],
    )
    assert [row["t"] for row in d["result"]["rows"]] == [0, 1, 2, 3]


def test_family_envelope_includes_verification(capsys):
    d = run_json(capsys, ["family", "--kind", "m3", "--n", "1"])
    r = d["result"]
    assert r["order"] == 27
    assert r["sets"] == [[1, 3, 8, 10], [3, 4, 5, 13], [2, 3, 7, 11]]
    assert r["claim"] == "type2"
    assert r["verification"]["resolved"] == "type2"
    assert r["verification"]["group_order"] == 3


def test_iso_relations(capsys):
    def relation(a, b, *extra):
        d = run_json(capsys, ["iso", "--n", "16", "--a", a, "--b", b, *extra])
        return d["result"]

    assert relation("1,2,7", "1,2,7")["relation"] == "equal"
    assert relation("1,2,7", "3,5,6")["relation"] == "type1"
    r = relation("1,2,7", "2,3,5")
    assert r["relation"] == "type2"
    assert r["m"] == 2 and r["t"] == [2, 6]
    assert relation("1,2,7", "1,3,5")["relation"] == "not-isomorphic"
    # isomorphic, no multiplier, not a single rotation: composite case
    r = relation("1,2,7", "1,6,7")
    assert r["relation"] == "isomorphic-unclassified"
    assert sorted(r["mapping"]) == list(range(16))


def test_iso_above_cap_is_inconclusive(capsys):
    # scaled copies of the composite pair: invariants agree, no multiplier,
    # no single rotation, and the order is above the brute-force cap
    d = run_json(capsys, ["iso", "--n", "32", "--a", "2,4,14", "--b", "2,12,14"])
    assert d["result"]["relation"] == "inconclusive"


def test_census_emits_ndjson(capsys):
    code, out, err = run(capsys, ["census", "--n", "16", "--m", "2", "--sizes", "3"])
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    classes = [d for d in lines if d["type"] == "class"]
    summary = [d for d in lines if d["type"] == "summary"]
    assert len(classes) == 2 and len(summary) == 1
    assert classes[0]["base"]["jumps"] == [1, 2, 7]
    assert [m["jumps"] for m in classes[0]["members"]] == [[1, 2, 7], [2, 3, 5]]
    assert classes[1]["base"]["jumps"] == [1, 6, 7]
    assert summary[0] == {
        "type": "summary",
        "n": 16,
        "m": 2,
        "sizes": [3],
        "examined": 52,
        "classes": 2,
        "t2_equals_v": 4,
    }


def test_census_with_no_classes_is_summary_only(capsys):
    code, out, _ = run(capsys, ["census", "--n", "8", "--m", "2", "--sizes", "3"])
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert len(lines) == 1
    assert lines[0]["type"] == "summary"
    assert lines[0]["examined"] == 4


def test_exit_code_for_invalid_jumps(capsys):
    code, _, err = run(capsys, ["reduce", "--n", "8", "--set", "0"])
    assert code == 2
    assert "loop" in err


def test_exit_code_for_inadmissible_parameters(capsys):
    code, _, err = run(capsys, ["t2set", "--n", "12", "--m", "2", "--set", "1,2,7"])
    assert code == 3
    assert "NoDivisorCubed" in err
    code, _, err = run(
        capsys, ["iso", "--n", "16", "--a", "1,2,7", "--b", "2,3,5", "--m", "4"]
    )
    assert code == 3


def test_exit_code_for_degenerate_families(capsys):
    code, _, err = run(capsys, ["family", "--kind", "m2", "--n", "3", "--s", "2"])
    assert code == 4
    assert "makes both sets equal" in err


def test_exit_code_for_budget_flag_and_env(capsys, monkeypatch):
    code, _, err = run(
        capsys, ["census", "--n", "16", "--m", "2", "--sizes", "3", "--budget", "5"]
    )
    assert code == 6
    assert "budget" in err
    monkeypatch.setenv("CIRCULANT_CENSUS_BUDGET", "5")
    code, _, err = run(capsys, ["census", "--n", "16", "--m", "2", "--sizes", "3"])
    assert code == 6


def test_out_flag_writes_the_envelope_to_a_file(capsys, tmp_path):
    path = tmp_path / "reduced.json"
    code, out, _ = run(capsys, ["reduce", "--n", "16", "--set", "9", "--out", str(path)])
    assert code == 0
    assert out == ""
    d = json.loads(path.read_text())
    assert d["result"] == {"n": 16, "jumps": [7]}


def test_module_entry_point_runs_as_a_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "circulant.cli", "reduce", "--n", "16", "--set", "9"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["jumps"] == [7]
