from __future__ import annotations

import json
import subprocess
import sys

import pytest

from supervir.algebra import Family
from supervir.cli import run
from supervir.modules import ModuleSpec, act
from supervir.syntax import parse_generator, parse_vector


def out_of(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr()


def test_verify_module_exit_zero(capsys):
    code, cap = out_of(capsys, ["verify-module", "--family", "ramond", "--window", "3", "--max-deg", "4"])
    assert code == 0
    assert "PASS" in cap.out


def test_act_prints_canonical_vector(capsys):
    code, cap = out_of(capsys, ["act", "--family", "ns", "G(1/2)", "[even: 0 | odd: 1]"])
    assert code == 0
    assert cap.out.strip() == "[even: q^2*(x+a) | odd: 0]"


def test_search_dimension_zero(capsys):
    code, cap = out_of(capsys, ["search-intertwiner", "--A", "ramond:1,1", "--B", "ramond:1,2", "--max-deg", "4"])
    assert code == 0
    assert cap.out.startswith("dimension: 0")


def test_search_json(capsys):
    code, cap = out_of(
        capsys, ["search-intertwiner", "--A", "ns:2,3", "--B", "ramond/restricted:w,3", "--max-deg", "3", "--json"]
    )
    data = json.loads(cap.out)
    assert code == 0 and data["dimension"] == 1 and data["schema"] == 1


def test_bracket(capsys):
    code, cap = out_of(capsys, ["bracket", "L(2)", "L(-1)"])
    assert code == 0 and cap.out.strip() == "3*L(1)"


def test_usage_error_names_flag(capsys):
    code, cap = out_of(capsys, ["verify-module", "--family", "ns", "--variant", "restricted"])
    assert code == 2
    assert "--variant" in cap.err


def test_bad_point_names_flag(capsys):
    code, cap = out_of(capsys, ["check-freeness", "--params", "0,1"])
    assert code == 2 and "--params" in cap.err


def test_parse_error_exit_two(capsys):
    code, cap = out_of(capsys, ["act", "--family", "ramond", "G(1/2)", "[even: 1 | odd: 0]"])
    assert code == 2 and "error" in cap.err


def test_argparse_rejects_bad_window(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify-algebra", "--window", "0"])
    assert exc.value.code == 2


def test_failing_probe_exits_one(capsys):
    code, cap = out_of(capsys, ["probe-simplicity", "--seed-list", "1,0", "--max-words", "3", "--json"])
    assert code == 1
    data = json.loads(cap.out)
    assert data["status"] == "fail" and data["witnesses"]


def test_json_written_to_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _ = out_of(capsys, ["verify-module", "--family", "ramond", "--window", "1", "--max-deg", "1", "--json", str(path)])
    data = json.loads(path.read_text())
    assert code == 0
    assert set(data) >= {"schema", "check", "parameters", "bounds", "status", "witnesses", "elapsed"}


def test_json_report_schema(capsys):
    code, cap = out_of(capsys, ["verify-iso", "--map", "big-phi", "--window", "2", "--max-deg", "2", "--json"])
    data = json.loads(cap.out)
    assert code == 0
    assert data["schema"] == 1 and data["check"] == "intertwiner"
    assert data["details"]["bijective"] is True


def test_witness_strings_reparse():
    from supervir.morphisms import identity_map, verify_intertwiner

    a = ModuleSpec.symbolic(Family.RAMOND, alpha=1)
    b = ModuleSpec.symbolic(Family.RAMOND, alpha=2)
    r = verify_intertwiner(identity_map(a, b), 1, 1)
    w = r.witnesses[0]
    g = parse_generator(w["inputs"]["g"], Family.RAMOND)
    v = parse_vector(w["inputs"]["v"], Family.RAMOND)
    assert str(act(g, v, a)) == w["lhs"]
    assert str(act(g, v, b)) == w["rhs"]


def test_probe_submodule(capsys):
    code, cap = out_of(capsys, ["probe-submodule", "--submodule", "gamma", "--window", "2", "--max-deg", "3"])
    assert code == 0
    assert "closure" in cap.out and "EVIDENCE" in cap.out


def test_check_freeness(capsys):
    code, _ = out_of(capsys, ["check-freeness", "--family", "ns", "--max-deg", "3"])
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supervir", "bracket", "G(0)", "G(0)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "2*L(0)"
