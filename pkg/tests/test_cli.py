import json

import pytest

from holoforge import data
from holoforge.cli import main
from holoforge.matrix import Matrix, format_matrix, reduce_mod_p
from holoforge.normal_forms import jordan_block
from holoforge.report import RunReport
from holoforge.ring import RingSpec

F2 = RingSpec(2)


@pytest.fixture
def files(tmp_path):
    mats = {
        "j2": jordan_block(F2, 2),
        "id2": Matrix.identity(F2, 2),
        "j3j1": Matrix.block_diag([jordan_block(F2, 3), jordan_block(F2, 1)]),
        "abar": reduce_mod_p(data.matrix("final.A")),
        "bbar": reduce_mod_p(data.matrix("final.B")),
        "A": data.matrix("final.A"),
        "B": data.matrix("final.B"),
    }
    out = {}
    for name, m in mats.items():
        path = tmp_path / f"{name}.mat"
        path.write_text(format_matrix(m))
        out[name] = str(path)
    groups = {"d8": {"kind": "dihedral", "n": 4}, "q8": {"kind": "quaternion"},
              "hol": {"kind": "holomorph", "ring": [2, 1], "n": 2, "H": [[[1, 1], [0, 1]]]},
              "e6b_j": {"kind": "holomorph", "ring": [2, 1], "n": 3, "H": [[[1, 1, 0], [0, 1, 1], [0, 0, 1]]]},
              "bad": {"kind": "nonsense"}}
    for name, g in groups.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(g))
        out[name] = str(path)
    (tmp_path / "broken.mat").write_text("2 1 2 2\n1 0\n")
    out["broken"] = str(tmp_path / "broken.mat")
    return out


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_similar(files, capsys):
    code, d = run(capsys, "similar", files["abar"], files["bbar"])
    assert code == 0 and d["similar"] and d["overall"]
    code, d = run(capsys, "similar", files["j2"], files["id2"])
    assert code == 2 and d["similar"] is False


def test_partition_rcf_minpoly(files, capsys):
    code, d = run(capsys, "partition", files["j3j1"])
    assert code == 0 and d["partition"] == [1, 0, 1]
    code, d = run(capsys, "rcf", files["abar"])
    assert code == 0 and d["invariant_factors"] == [[1, 1, 0, 1, 1]] and "witness" in d
    code, d = run(capsys, "minpoly", files["abar"])
    assert code == 0 and d["factors"] == [[[1, 1], 2], [[1, 1, 1], 1]]


def test_holiso(files, capsys):
    code, d = run(capsys, "holiso", "--p", "2", "--n", "4", files["abar"], files["bbar"])
    assert code == 0 and d["isomorphic"] and d["exponent"] == 1
    code, d = run(capsys, "holiso", files["j2"], files["j2"])
    assert d["exponent"] == 1 and d["witness"] == [[1, 0], [0, 1]]
    code, d = run(capsys, "holiso", files["j2"], files["id2"])
    assert code == 2 and not d["isomorphic"]


def test_conj_ring(files, capsys):
    code, d = run(capsys, "conj-ring", files["A"], files["B"], "--budget", "100")
    assert code == 2 and d["verdict"] == "NotConjugate"
    assert d["separating_invariant"].startswith("determinant")
    code, d = run(capsys, "conj-ring", files["A"], files["A"])
    assert code == 0 and d["verdict"] == "Conjugate"


def test_group_commands(files, capsys):
    code, d = run(capsys, "oracle-iso", files["hol"], files["d8"])
    assert code == 0 and d["isomorphic"]
    code, d = run(capsys, "oracle-iso", files["d8"], files["q8"], "--budget", "1000")
    assert code == 2 and not d["isomorphic"]
    code, d = run(capsys, "group-report", files["e6b_j"])
    assert code == 0
    assert (d["order"], d["derived_order"], d["nilpotency_class"]) == (32, 4, 3)


def test_verify_and_example(capsys):
    code, d = run(capsys, "verify-lindo", "--p", "2", "--n", "2")
    assert code == 0 and d["pairs"] == 36 and d["disagreements"] == []
    code, d = run(capsys, "example", "e6a")
    assert code == 0 and d["overall"]
    code, d = run(capsys, "example", "e3", "--p", "3")
    assert code == 0 and d["overall"]
    assert RunReport.from_dict(d).to_dict() == d


def test_errors_exit_1(files, capsys):
    for argv in (["similar", files["broken"], files["j2"]], ["similar", "missing.mat", files["j2"]],
                 ["group-report", files["bad"]], ["example", "nope"], ["verify", "nope"],
                 ["partition", files["abar"]], ["holiso", "--p", "3", files["j2"], files["j2"]]):
        code, d = run(capsys, *argv)
        assert code == 1 and "error" in d


def test_text_output(files, capsys):
    assert main(["similar", files["j2"], files["id2"]]) == 2
    assert capsys.readouterr().out.startswith("similar: NEGATIVE")


def test_cap_env(monkeypatch, files, capsys):
    monkeypatch.setenv("HOLOFORGE_CAP", "4")
    code, d = run(capsys, "oracle-iso", files["hol"], files["d8"])
    assert code == 1 and d["error"] == "CapExceeded"
    code, d = run(capsys, "oracle-iso", files["hol"], files["d8"], "--cap", "100")
    assert code == 0
