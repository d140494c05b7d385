import json

import pytest

from braidsys import BraidSystem, braids_equal
from braidsys.cli import main
from braidsys.invariants import BraidInvariantReport, SystemInvariantReport


@pytest.fixture
def system_files(tmp_path):
    paths = {}
    for name, degree, comps in [
        ("intro_b", 4, ["1,2,-3", "3", "-2", "-1"]),
        ("intro_bp", 4, ["1,-2,3", "-3", "2", "-1"]),
        ("fused_c", 4, ["1,-2,3", "-3,2,-1"]),
        ("pair", 2, ["1", "1"]),
    ]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps({"degree": degree, "components": comps}))
        paths[name] = str(p)
    return paths


def test_invariants_word_mode(capsys):
    assert main(["invariants", "--degree", "5", "--word", "3,-1,4"]) == 0
    out = capsys.readouterr().out
    assert "determinant: -144" in out
    assert "(x+2)^2" in out
    assert "x^5 - 21x^3 - 16x^2 + 108x + 144" in out


def test_invariants_empty_word(capsys):
    assert main(["invariants", "--degree", "4", "--word", ""]) == 0
    out = capsys.readouterr().out
    assert "rank: 0" in out and "x^4" in out


def test_invariants_system_mode(capsys, system_files):
    assert main(["invariants", "--system", system_files["intro_bp"]]) == 0
    out = capsys.readouterr().out
    assert "E = {-3}" in out
    assert "P = x^6 (x+1)^3 (x-1)^6 (x+3)" in out


def test_invariants_json_roundtrip(capsys, system_files):
    assert main(["invariants", "--degree", "4", "--word", "1,2,-3", "--json"]) == 0
    rep = BraidInvariantReport.from_json(json.loads(capsys.readouterr().out))
    assert rep.determinant == 1
    assert main(["invariants", "--system", system_files["intro_b"], "--json"]) == 0
    sys_rep = SystemInvariantReport.from_json(json.loads(capsys.readouterr().out))
    assert sys_rep.perm_monodromy_order == 24


def test_invariants_usage_errors(capsys):
    assert main(["invariants", "--degree", "4"]) == 1
    assert main(["invariants", "--degree", "4", "--word", "9"]) == 1
    assert main(["invariants", "--system", "/nonexistent.json"]) == 1


def test_compare_distinguished(capsys, system_files):
    rc = main(["compare", system_files["intro_b"], system_files["intro_bp"], "--json"])
    assert rc == 2
    result = json.loads(capsys.readouterr().out)
    assert result["verdict"] == "distinguished_by:charpoly_product"
    by_name = {e["name"]: e for e in result["invariants"]}
    assert by_name["trace_product"]["equal"] is True
    assert by_name["perm_monodromy_order"]["equal"] is True
    assert by_name["exponent_sum_multiset"]["equal"] is True
    assert by_name["charpoly_multiset"]["equal"] is False


def test_compare_euler_necessary(capsys, system_files):
    rc = main(["compare", system_files["intro_bp"], system_files["fused_c"], "--json"])
    assert rc == 2
    result = json.loads(capsys.readouterr().out)
    assert result["verdict"] == "euler_necessary"
    assert not result["same_shape"]


def test_compare_self(capsys, system_files):
    rc = main(["compare", system_files["intro_b"], system_files["intro_b"]])
    assert rc == 0
    assert "indistinguishable_by_invariants" in capsys.readouterr().out


def test_apply_fusion_script(capsys, system_files, tmp_path):
    script = tmp_path / "fuse.txt"
    script.write_text("FUSE 2 1\nFUSE 2 1\n")
    rc = main(["apply", "--system", system_files["intro_bp"], "--script", str(script), "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert all(step["tau_check"] for step in result["steps"])
    final = BraidSystem.from_json(result["final"])
    target = BraidSystem.from_json(json.load(open(system_files["fused_c"])))
    assert all(braids_equal(a, b) for a, b in zip(final.components, target.components))


def test_apply_roundtrip_scripts(capsys, system_files):
    rc = main(["apply", "--system", system_files["intro_b"], "--steps", "H 1 + / H 1 -", "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    final = BraidSystem.from_json(result["final"])
    original = BraidSystem.from_json(json.load(open(system_files["intro_b"])))
    assert all(braids_equal(a, b) for a, b in zip(final.components, original.components))

    rc = main(["apply", "--system", system_files["intro_b"], "--steps", "STAB / DESTAB", "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    final = BraidSystem.from_json(result["final"])
    assert all(braids_equal(a, b) for a, b in zip(final.components, original.components))


def test_apply_global_conjugation_roundtrip(capsys, system_files):
    rc = main(["apply", "--system", system_files["intro_b"], "--steps", "GC 1,-2 / GC 2,-1", "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    final = BraidSystem.from_json(result["final"])
    original = BraidSystem.from_json(json.load(open(system_files["intro_b"])))
    assert all(braids_equal(a, b) for a, b in zip(final.components, original.components))


def test_orbit_target_witness(capsys, system_files, tmp_path):
    moved = tmp_path / "moved.json"
    original = BraidSystem.from_json(json.load(open(system_files["intro_b"])))
    from braidsys import HurwitzMove, hurwitz_move

    moved.write_text(json.dumps(hurwitz_move(original, HurwitzMove(2)).to_json()))
    rc = main(["orbit", "--system", system_files["intro_b"], "--target", str(moved), "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert result["status"] == "target_found"
    assert result["witness"] == [{"index": 2, "inverse": False}]


def test_apply_reports_bad_step(capsys, system_files):
    rc = main(["apply", "--system", system_files["intro_b"], "--steps", "H 1 + / FUSE 9 9"])
    assert rc == 1
    assert "step 2" in capsys.readouterr().err


def test_apply_rejects_malformed_script(capsys, system_files):
    assert main(["apply", "--system", system_files["intro_b"], "--steps", "WIGGLE 3"]) == 1


def test_orbit_command(capsys, system_files):
    rc = main(["orbit", "--system", system_files["pair"], "--json"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert result["status"] == "complete" and result["states_visited"] == 1

    rc = main(["orbit", "--system", system_files["intro_b"], "--max-states", "100", "--json"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["status"] == "truncated"

    rc = main(["orbit", "--system", system_files["pair"], "--target", system_files["pair"]])
    assert rc == 0
    assert "target_found" in capsys.readouterr().out


def test_papersuite(capsys):
    assert main(["papersuite", "--json"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["all_pass"] and len(result["rows"]) > 30


def test_papersuite_flipped_convention(capsys):
    # pure-power rows are symmetric, so the whole table passes either way
    assert main(["papersuite", "--flipped-convention", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["all_pass"]


def test_usage_error_exit_code():
    assert main(["nonsense"]) == 1
    assert main([]) == 1


def test_malformed_system_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"degree": 3}))
    assert main(["invariants", "--system", str(bad)]) == 1
