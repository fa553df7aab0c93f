from __future__ import annotations

import json
import subprocess
import sys

import pytest

from e6verify.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weyl_classes_json(capsys):
    code, out, _ = run(capsys, "weyl", "classes", "--fast", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 51840
    assert len(data["classes"]) == 25


def test_weyl_table1_reports_discrepancies(capsys):
    code, out, _ = run(capsys, "weyl", "table1", "--fast", "--json")
    data = json.loads(out)
    assert code == 1
    assert any("10a" in f for f in data["findings"])


def test_incidence(capsys):
    code, out, _ = run(capsys, "incidence", "dump")
    assert code == 0 and len(out.splitlines()) == 28
    code, out, _ = run(capsys, "incidence", "check", "--json")
    assert code == 0 and json.loads(out)["status"] == "PASS"


def test_monodromy_preset(capsys):
    code, out, _ = run(capsys, "monodromy", "--preset", "thm-dominance", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["determinant"] == -4096
    assert len(data["normalized_forms"]) == 21


def test_monodromy_caterpillar_fails(capsys):
    code, out, _ = run(capsys, "monodromy", "--tree", "caterpillar")
    assert code == 1
    assert "determinant: 0" in out


def test_monodromy_from_root_file(tmp_path, capsys):
    from e6verify.presets import ROOT_PRESETS

    p = tmp_path / "roots.txt"
    p.write_text(ROOT_PRESETS["thm-dominance"].replace(" ", "\n") + "\n# comment\n")
    code, out, _ = run(capsys, "monodromy", "--roots", str(p), "--json")
    assert code == 0 and json.loads(out)["abs_determinant"] == 4096


def test_mutated_preset_fails(capsys):
    from e6verify.presets import ROOT_PRESETS

    tokens = ROOT_PRESETS["thm-dominance"].split()
    tokens[6] = "a:1,2"  # still generates E6, but the forms become dependent
    code, out, _ = run(capsys, "monodromy", "--roots", " ".join(tokens), "--json")
    assert code == 1
    assert json.loads(out)["certificate"] == "FAIL"


def test_non_generating_roots_are_an_input_error(capsys):
    roots = " ".join(["a:1,2", "a:2,3", "a:3,4", "a:4,5", "b:1,2,3"] * 2 + ["a:1,2", "a:2,3"])
    code, _, err = run(capsys, "monodromy", "--roots", roots)
    assert code == 2
    assert "generate" in err


def test_bad_root_file_is_an_input_error(tmp_path, capsys):
    p = tmp_path / "roots.txt"
    p.write_text("a:1,2\na:1,1\n")
    code, _, err = run(capsys, "monodromy", "--roots", str(p))
    assert code == 2
    assert "line 2" in err


def test_boundary_commands(capsys):
    code, out, _ = run(capsys, "boundary", "orbits", "--roots", "a:1,2 a:2,3", "--json")
    assert code == 0 and json.loads(out)["type"] == "A2"
    code, out, _ = run(capsys, "boundary", "toric-rank", "--roots",
                       "b:1,2,3 a:1,2 a:2,3 a:3,4 a:4,5", "--json")
    data = json.loads(out)
    assert code == 0 and data["lattice"] == "D5" and data["toric_rank"] == 0
    code, _, _ = run(capsys, "boundary", "table2", "--fast")
    assert code == 0
    code, _, _ = run(capsys, "boundary", "table3")
    assert code == 1
    code, out, _ = run(capsys, "boundary", "e-l", "--json")
    assert code == 1 and json.loads(out)["data"]["E_L"]["E6"] == [1]


def test_boundary_orbits_needs_roots(capsys):
    with pytest.raises(SystemExit) as info:
        main(["boundary", "orbits"])
    assert info.value.code == 2


def test_sections_modes(capsys):
    code, out, _ = run(capsys, "sections", "--preset", "thm-2k5", "--mode", "omega", "--json")
    assert code == 0 and json.loads(out)["dim"] == 46
    code, out, _ = run(capsys, "sections", "--preset", "thm-petri", "--mode", "petri", "--json")
    assert code == 0 and json.loads(out)["petri"] is True
    code, out, _ = run(capsys, "sections", "--preset", "thm-petri", "--mode", "2k5l", "--json")
    assert code == 0 and "warnings" in json.loads(out)


def test_sections_bad_points(capsys):
    code, _, err = run(capsys, "sections", "--points", "1,2,3")
    assert code == 2
    code, _, _ = run(capsys, "sections", "--points", "1,x")
    assert code == 2


def test_divisors(capsys):
    code, out, _ = run(capsys, "divisors", "verify")
    assert code == 0 and out.count("PASS") == 31
    code, out, _ = run(capsys, "divisors", "eval", "--expr", "kappa1 + D_syz")
    assert code == 0 and out.strip() == "12 lambda - 6 D_E6"
    code, _, _ = run(capsys, "divisors", "eval", "--expr", "3 +")
    assert code == 2


def test_unknown_flag_is_rejected():
    with pytest.raises(SystemExit) as info:
        main(["weyl", "classes", "--nope"])
    assert info.value.code == 2


def test_out_file(tmp_path, capsys):
    p = tmp_path / "o.json"
    code, out, _ = run(capsys, "incidence", "check", "--json", "--out", str(p))
    assert out == ""
    assert json.loads(p.read_text())["criterion"] == 5


def test_verify_paper_json_is_deterministic_and_round_trips(tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"ledger{k}.json"
        r = subprocess.run([sys.executable, "-m", "e6verify.cli", "verify-paper", "--fast",
                            "--json", "--out", str(p)], capture_output=True, text=True)
        assert r.returncode in (0, 1)
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert json.loads(json.dumps(data)) == data
    assert len(data["checks"]) == 10
    assert data["failed"] == len(data["failures"])
    assert (r.returncode == 0) == (data["failed"] == 0)
