import json

from klrspecht import __version__
from klrspecht.cli import main
from klrspecht.perms import POLICY
from klrspecht.tableaux import parse_node, parse_shape, parse_tableau


def run(capsys, *argv, environ=None):
    code = main(list(argv), environ or {})
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out else None), err


def test_character_two_one(capsys):
    code, data, _ = run_json(capsys, "character", "--shape", "2,1", "--charge", "0", "--e", "2")
    assert code == 0
    assert len(data["character"]) == 2 and data["rank"] == 2
    assert data["version"] == __version__ and data["policy"] == POLICY
    assert data["ground"] == {"e": 2, "charge": [0]}
    for b in data["basis"]:
        assert parse_tableau(b["tableau"]).is_standard()


def test_character_empty_shape(capsys):
    code, data, _ = run_json(capsys, "character", "--shape", "-", "--charge", "0", "--e", "2")
    assert code == 0 and data["rank"] == 1
    assert data["character"] == [{"degree": 0, "residues": [], "multiplicity": 1}]


def test_character_column_level_two(capsys):
    code, data, _ = run_json(
        capsys, "character", "--shape", "3,1|2,2", "--charge", "0,0", "--e", "2", "--orientation", "column"
    )
    assert code == 0
    assert all(len(row["residues"]) == 8 for row in data["character"])
    assert sum(row["multiplicity"] for row in data["character"]) == data["rank"]
    assert parse_shape(data["shape"]) == parse_shape("3,1|2,2")


def test_character_csv(capsys):
    code, out, _ = run(capsys, "character", "--shape", "2,1", "--charge", "0", "--e", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "degree,residues,multiplicity" and len(lines) == 3


def test_garnir_worked_example(capsys):
    code, data, _ = run_json(
        capsys, "garnir", "--shape", "1|7,7,4,1", "--node", "2,3,2", "--charge", "0,0", "--e", "2"
    )
    assert code == 0
    assert (data["k"], data["f"], data["n"], data["u"], data["v"]) == (3, 2, 12, 11, 18)
    assert data["coset_count"] == 3 and len(data["gar"]) == 3
    assert data["element_terms"] >= 1
    assert parse_node(",".join(map(str, data["node"]))) == (2, 3, 2)


def test_garnir_column_example(capsys):
    code, data, _ = run_json(
        capsys, "garnir", "--shape", "1|7,7,4,1", "--node", "(3,1,2)", "--charge", "0,0", "--e", "2",
        "--orientation", "column",
    )
    assert code == 0 and (data["k"], data["n"]) == (2, 4)


def test_garnir_e_zero(capsys):
    code, data, _ = run_json(
        capsys, "garnir", "--shape", "1|7,7,4,1", "--node", "2,3,2", "--charge", "0,0", "--e", "0"
    )
    assert code == 0 and data["k"] == 0 and data["element_terms"] == 1


def test_garnir_bad_node(capsys):
    code, _, err = run(capsys, "garnir", "--shape", "2,1", "--node", "2,1,1", "--e", "2")
    assert code == 2 and "is not in" in err


def test_verify_braid(capsys):
    code, data, _ = run_json(capsys, "verify", "--suite", "braid", "--e", "2", "--k", "2", "--lambda", "1,1")
    assert code == 0 and data["passed"]
    code, data, _ = run_json(capsys, "verify-braid", "--e", "3", "--k", "2")
    assert code == 0 and len(data["reports"]) == 2


def test_verify_all_shape(capsys):
    code, data, _ = run_json(capsys, "verify", "--suite", "all", "--shape", "2,1", "--charge", "0", "--e", "2")
    assert code == 0 and data["passed"]
    titles = " ".join(r["title"] for r in data["reports"])
    for word in ("specht row", "specht column", "sign twist", "duality", "induction"):
        assert word in titles


def test_verify_relations_without_shape(capsys):
    code, data, _ = run_json(capsys, "verify", "--suite", "relations", "--seed", "7")
    assert code == 0 and data["passed"]


def test_usage_errors(capsys):
    assert run(capsys, "character", "--shape", "2,1", "--e", "1")[0] == 2
    assert run(capsys, "character", "--shape", "2,x", "--e", "2")[0] == 2
    assert run(capsys, "character", "--shape", "2|1", "--charge", "0", "--e", "2")[0] == 2
    assert run(capsys, "character", "--e", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "braid", "--e", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "duality", "--e", "2")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "character", "--shape", "3,2", "--e", "2", "--cap", "3")
    assert code == 3 and "cap" in err


def test_straighten(capsys):
    code, data, _ = run_json(capsys, "straighten", "--tableau", "2,3|1", "--e", "2")
    assert code == 0 and data["expansion"] == []
    code, data, _ = run_json(capsys, "straighten", "--tableau", "1,3|2", "--e", "2")
    assert data["expansion"] == [{"tableau": "1,3|2", "coefficient": 1, "degree": -1}]
    assert run(capsys, "straighten", "--tableau", "3,2|1", "--e", "2")[0] == 2
    assert run(capsys, "straighten", "--tableau", "1,1|2", "--e", "2")[0] == 2


def test_env_and_out_file(capsys, tmp_path):
    target = tmp_path / "char.json"
    code = main(
        ["character", "--shape", "2,1", "--out", str(target)],
        {"KLRSPECHT_E": "3", "KLRSPECHT_CHARGE": "0"},
    )
    capsys.readouterr()
    data = json.loads(target.read_text())
    assert code == 0 and data["ground"]["e"] == 3


def test_flags_override_env(capsys):
    code = main(["character", "--shape", "2,1", "--e", "2"], {"KLRSPECHT_E": "3"})
    data = json.loads(capsys.readouterr().out)
    assert code == 0 and data["ground"]["e"] == 2


def test_deterministic_output(capsys):
    args = ("character", "--shape", "3,1|1", "--charge", "0,1", "--e", "3")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "braid", "--e", "2", "--k", "2", "--format", "text")
    assert code == 0 and out.strip().endswith("all passed")


def test_failed_check_exits_one(capsys, monkeypatch):
    from klrspecht import cli
    from klrspecht.report import Report

    def broken(mu, g, config):
        rep = Report("induction broken")
        rep.add("gdim", False, "forced")
        return rep

    monkeypatch.setattr(cli, "verify_induction", broken)
    code, data, _ = run_json(capsys, "verify", "--suite", "induction", "--shape", "1|1", "--charge", "0,0", "--e", "2")
    assert code == 1 and not data["passed"]
    assert data["first_failure"] == {"report": "induction broken", "check": "gdim"}
