import io
import json
import subprocess
import sys

import pytest

from bbjsj import __version__
from bbjsj.cli import main

from conftest import DATA, GOLDEN


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_check_glued_triangles_passes_everything():
    code, out = run("check", DATA / "glued_triangles.g", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["f_vector"] == [6, 9, 4]
    assert d["h1"] == {"rank": 0, "torsion": []}
    assert all(d["hypotheses"].values())
    assert d["violation"] is None


def test_check_c4_exits_one(capsys):
    code, out = run("check", DATA / "c4.g")
    assert code == 1
    assert "H1: rank 1" in out
    err = capsys.readouterr().err
    assert "flag_not_simply_connected" in err and "witness: a b c d" in err


def test_check_emits_complex(tmp_path):
    target = tmp_path / "cx.json"
    code, _ = run("check", DATA / "glued_triangles.g", "--emit-complex", target)
    assert code == 0
    d = json.loads(target.read_text())
    assert d["f_vector"] == [6, 9, 4] and len(d["boundary_2"]) == 9


@pytest.mark.parametrize("name", ["malformed.g", "duplicate.g", "missing.g"])
def test_bad_input_exits_two(name, capsys):
    code, out = run("check", DATA / name)
    assert code == 2 and out == ""
    assert capsys.readouterr().err.startswith("error:")


def test_split():
    code, out = run("split", DATA / "glued_triangles.g", "--group", "bbg")
    assert code == 0 and out.startswith("H_Gamma splits (over Z): separating clique {2,3}")
    code, out = run("split", DATA / "glued_triangles.g", "--group", "raag", "--format", "json")
    d = json.loads(out)
    assert (d["case"], d["witness"], d["edge_group_rank_raag"]) == ("separating_clique", ["2", "3"], 2)


def test_split_c4_bbg_names_the_cycle(capsys):
    code, out = run("split", DATA / "c4.g", "--group", "bbg", "--format", "json")
    assert code == 1
    assert json.loads(out) == {"error": "hypothesis_violation", "hypothesis": "flag_not_simply_connected",
                               "witness": ["a", "b", "c", "d"]}
    assert "witness: a b c d" in capsys.readouterr().err


def test_present_k4_reduced():
    code, out = run("present", DATA / "k4.g", "--reduced")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gen e_ab, e_ac, e_ad"
    assert all(line.startswith("rel ") for line in lines[1:])
    code, out = run("present", DATA / "k4.g", "--reduced", "--format", "json")
    assert json.loads(out)["abelianization"] == {"rank": 3, "torsion": []}


def test_jsj_golden_outputs():
    for flavor in ("raag", "bbg"):
        code, out = run("jsj", DATA / "glued_triangles.g", "--group", flavor, "--format", "json")
        assert code == 0
        assert json.loads(out) == json.loads((GOLDEN / f"glued_triangles_{flavor}.json").read_text())
    code, out = run("jsj", DATA / "glued_triangles.g", "--group", "bbg", "--format", "dot")
    assert out == (GOLDEN / "glued_triangles_bbg.dot").read_text()


def test_jsj_blocks_text():
    code, out = run("jsj", DATA / "bowtie.g", "--group", "bbg")
    assert code == 0
    assert out.endswith("blocks joined at cut vertices c (free_product)\n")


def test_oracle_subcommand():
    code, out = run("oracle", "--max-n", 4, "--seed", 5, "--check", "topology", "--check", "jsj")
    assert code == 0
    d = json.loads(out)
    assert d["seed"] == 5 and d["ok"] and set(d["checks"]) == {"topology", "jsj"}


def test_argument_errors():
    with pytest.raises(SystemExit) as info:
        main(["oracle", "--max-n", "9"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["jsj", str(DATA / "glued_triangles.g")])
    assert info.value.code == 2


def test_version_and_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bbjsj", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == f"bbjsj {__version__} (format schema 1)"
