import json
import subprocess
import sys
from importlib import resources

import pytest

from jacpair.cli import main

DATA = str(resources.files("jacpair").joinpath("data/polygons.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), out, err


def test_analyze_positive(capsys):
    code, doc, _, _ = run(capsys, "analyze", "-f", "x+(y+x^2)^2", "-g", "y+x^2")
    assert code == 0
    assert doc["schema"] == 1 and doc["command"] == "analyze"
    assert doc["verdict"] == "TypicalCertified"
    assert doc["certificates"][0]["kind"] == "InfTypical"
    assert doc["report"]["config"]["seed"] == 0x1AC


def test_analyze_negative(capsys):
    code, doc, _, _ = run(capsys, "analyze", "-f", "x^2*y-x", "-g", "x*y^2-y")
    assert code == 2
    cert = doc["certificates"][0]
    assert cert["kind"] == "DirectWitness"
    assert cert["payload"]["positive"] == ["0", "0"]
    assert cert["payload"]["negative"] == ["1", "1/2"]
    assert cert["payload"]["values"] == ["1", "-1/4"]


def test_analyze_inconclusive_exit_code(capsys):
    # Jacobian 1 + x^2: positive but not constant
    code, doc, _, _ = run(capsys, "analyze", "-f", "x+1/3*x^3", "-g", "y")
    assert doc["verdict"] == "Inconclusive" and code == 3
    assert doc["certificates"] == []


def test_analyze_output_is_byte_stable(capsys):
    argv = ("analyze", "-f", "x+(y+x^2)^2", "-g", "y+x^2", "--seed", "9")
    _, _, first, _ = run(capsys, *argv)
    _, _, second, _ = run(capsys, *argv)
    assert first == second


def test_analyze_custom_config(capsys):
    code, doc, _, _ = run(capsys, "analyze", "-f", "x", "-g", "y", "--mu", "1,-1/2",
                          "--xi-bound", "3", "--depth", "8")
    assert code == 0
    cfg = doc["report"]["config"]
    assert cfg["mu_list"] == ["1", "-1/2"] and cfg["xi_bound"] == 3 and cfg["refine_depth"] == 8


def test_analyze_figures(capsys, tmp_path):
    code, doc, _, _ = run(capsys, "analyze", "-f", "x+(y+x^2)^2", "-g", "y+x^2",
                          "--figures", str(tmp_path))
    assert code == 0
    for name in ("newton_f.svg", "newton_g.svg"):
        assert (tmp_path / name).read_text().lstrip().startswith("<?xml")
    assert len(doc["figures"]) == 2


def test_syntax_error(capsys):
    code, doc, _, err = run(capsys, "analyze", "-f", "x+", "-g", "y")
    assert code == 1 and doc is None
    assert "offset 2" in err and "^" in err


def test_argparse_error_maps_to_input_code(capsys):
    assert main(["analyze", "-f", "x"]) == 1
    assert main(["nonsense"]) == 1
    capsys.readouterr()


def test_newton(capsys):
    code, doc, _, _ = run(capsys, "newton", "x+y+x^5+x^2*y^3")
    assert code == 0
    assert doc["polygon"] == {"vertices": [[0, 1], [1, 0], [5, 0], [2, 3]]}
    assert doc["dimension"] == 2
    rows = {tuple(map(tuple, r["points"])): r for r in doc["outer_edges"]}
    assert rows[((5, 0), (2, 3))]["interior_points"] == [[4, 1], [3, 2]]
    assert rows[((2, 3), (0, 1))]["interior_points"] == [[1, 2]]


def test_newton_face_and_svg(capsys, tmp_path):
    svg = tmp_path / "p.svg"
    code, doc, _, _ = run(capsys, "newton", "x^2*y^3-2*x*y^2+y+x", "--xi", "-1,1",
                          "--svg", str(svg))
    assert code == 0
    assert doc["restriction"] == "x^2*y^3 - 2*x*y^2 + y"
    assert doc["reduction"] == {"nu": [0, -1], "F": "s^2 - 2*s + 1", "prefactor": [1, -1]}
    first = svg.read_bytes()
    run(capsys, "newton", "x^2*y^3-2*x*y^2+y+x", "--xi", "-1,1", "--svg", str(svg))
    assert svg.read_bytes() == first


def test_newton_point_and_zero(capsys):
    code, doc, _, _ = run(capsys, "newton", "5")
    assert code == 0 and doc["dimension"] == 0 and doc["outer_edges"] == []
    code, _, _, err = run(capsys, "newton", "0")
    assert code == 1 and "zero polynomial" in err


def test_restrict(capsys):
    code, doc, _, _ = run(capsys, "restrict", "y*(x*y-1)^2+x", "--xi", "-1,1")
    assert code == 0
    assert doc["degenerate"] is True and doc["witness"] == "s - 1"
    code, doc, _, _ = run(capsys, "restrict", "x^2*y^3-2*x*y^2+y+x", "--points", "0,1;2,3")
    assert doc["restriction"] == "x^2*y^3 + y"


def test_roots(capsys):
    code, doc, _, _ = run(capsys, "roots", "(x-1)^2*(x+2)*(x^2+1)")
    assert code == 0
    assert doc["count"] == 2 and doc["rational_roots"] == ["-2", "1"]
    assert sorted(f["multiplicity"] for f in doc["squarefree_factors"]) == [1, 2]
    code, doc, _, _ = run(capsys, "roots", "x^2-2", "--interval", "-2,0")
    assert doc["count"] == 1
    code, _, _, err = run(capsys, "roots", "x*y")
    assert code == 1 and "x alone" in err


def test_enumerate_case(capsys):
    code, doc, _, _ = run(capsys, "enumerate", "--case", "II")
    assert code == 0 and doc["count"] == 6


def test_enumerate_audit(capsys, tmp_path):
    code, doc, _, _ = run(capsys, "enumerate", "--case", "II", "--audit", DATA,
                          "--figures", str(tmp_path))
    assert code == 0
    assert doc["audit"]["passed"] and doc["audit"]["survivors"] == ["D2", "D5"]
    assert (tmp_path / "enumerate_II.svg").exists()


def test_enumerate_failed_audit_exit_code(capsys):
    code, doc, _, _ = run(capsys, "enumerate", "--case", "THM2", "--audit", DATA)
    assert doc["audit"]["passed"] is False and code == 2


def test_enumerate_bad_inputs(capsys, tmp_path):
    code, _, _, err = run(capsys, "enumerate", "--case", "bogus")
    assert code == 1 and "unknown case" in err
    bad = tmp_path / "c.json"
    bad.write_text('{"max_degree": 2, "nope": true}')
    code, _, _, err = run(capsys, "enumerate", "--constraints", str(bad))
    assert code == 1 and "unknown constraint" in err
    good = tmp_path / "g.json"
    good.write_text(json.dumps({"max_degree": 1, "required": [[1, 0], [0, 1]],
                                "forbidden": [[0, 0]]}))
    code, doc, _, _ = run(capsys, "enumerate", "--constraints", str(good))
    assert code == 0 and doc["polygons"] == [[[0, 1], [1, 0]]]


def test_gen_tame(capsys):
    code, doc, _, _ = run(capsys, "gen-tame", "--seed", "4", "--count", "3", "--steps", "2")
    assert code == 0 and len(doc["pairs"]) == 3
    assert all(p["jacobian"] not in ("0", "") and "x" not in p["jacobian"]
               and "y" not in p["jacobian"] for p in doc["pairs"])


@pytest.mark.parametrize("argv", [["--version"], ["analyze", "--help"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "jacpair", *argv], capture_output=True,
                          text=True)
    assert proc.returncode == 0 and proc.stdout
