import json

import pytest

from graphwarmth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_and_warmth_pipeline(tmp_path, capsys):
    path = str(tmp_path / "c5.txt")
    code, out, _ = run(capsys, "gen", "cycle", "5", "-o", path)
    assert code == 0
    code, out, _ = run(capsys, "warmth", "-i", path)
    assert code == 0
    assert "warmth = 3" in out


def test_gen_dimacs_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "pet.col")
    code, _, _ = run(capsys, "gen", "petersen", "-o", path, "--out-format", "dimacs")
    assert code == 0
    code, out, _ = run(capsys, "chromatic", "-i", path)
    assert code == 0
    assert "chi = 3" in out


def test_warmth_json(tmp_path, capsys):
    path = str(tmp_path / "k4.txt")
    run(capsys, "gen", "complete", "4", "-o", path)
    code, out, _ = run(capsys, "--json", "warmth", "-i", path, "--mode", "exact")
    assert code == 0
    assert json.loads(out) == {"lo": 4, "hi": 4, "mode": "exact"}


def test_homology_command(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    run(capsys, "gen", "grotzsch", "-o", path)
    code, out, _ = run(capsys, "--json", "homology", "-i", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["betti"] == [1, 0, 1, 0, 0]
    assert payload["hconn"] == 1


def test_fold_command(tmp_path, capsys):
    path = str(tmp_path / "p5.txt")
    run(capsys, "gen", "path", "5", "-o", path)
    code, out, _ = run(capsys, "--json", "fold", "-i", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["residue_vertices"] == 2
    assert not payload["dismantlable"]


def test_conjecture_command(tmp_path, capsys):
    path = str(tmp_path / "c7.txt")
    run(capsys, "gen", "cycle", "7", "-o", path)
    code, out, _ = run(capsys, "conjecture", "-i", path)
    assert code == 0
    assert "consistent" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    code, _, err = run(capsys, "warmth", "-i", str(bad))
    assert code == 2
    assert "error" in err


def test_unknown_family_exit_code(capsys):
    code, _, err = run(capsys, "gen", "dodecahedron")
    assert code == 2


def test_inconclusive_exit_code(tmp_path, capsys):
    # budget 0 forces a chromatic interval
    path = str(tmp_path / "g.txt")
    run(capsys, "gen", "grotzsch", "-o", path)
    code, out, _ = run(capsys, "chromatic", "-i", path, "--budget-ms", "0")
    assert code == 3
    assert "chi in" in out


def test_sweep_command(tmp_path, capsys):
    csv_path = str(tmp_path / "sweep.csv")
    code, out, _ = run(
        capsys, "sweep", "--n", "7", "--p", "0.4", "--trials", "3",
        "--seed", "s", "--csv", csv_path,
    )
    assert code == 0
    with open(csv_path) as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 4  # header + 3 trials


def test_gen_seeded_gnp_deterministic(capsys):
    code, out1, _ = run(capsys, "gen", "gnp", "9", "0.5", "--seed", "z")
    code, out2, _ = run(capsys, "gen", "gnp", "9", "0.5", "--seed", "z")
    assert out1 == out2
