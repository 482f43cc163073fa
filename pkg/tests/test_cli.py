import json
import subprocess
import sys

import pytest

from scop.cli import run
from scop.fixtures import garden_dict

PET_ARGS = ["lattice", "gen", "-g", "e1,e2,e6", "-z", "e1^e6", "-z", "e2^e6"]


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_json(capsys):
    code, out, _ = call(capsys, *PET_ARGS, "--format", "json")
    assert code == 0
    assert len(json.loads(out)["elements"]) == 28


def test_gen_deterministic(capsys):
    a = call(capsys, *PET_ARGS, "--format", "dot")[1]
    b = call(capsys, *PET_ARGS, "--format", "dot")[1]
    assert a == b and a.startswith("digraph")


def test_gen_out_and_export_roundtrip(capsys, tmp_path):
    path = tmp_path / "m.json"
    assert call(capsys, *PET_ARGS, "--out", str(path))[1] == ""
    code, out, _ = call(capsys, "lattice", "export", "--in", str(path), "--format", "json")
    assert code == 0 and out == path.read_text()
    code, out, _ = call(capsys, "lattice", "verify", "--in", str(path))
    report = json.loads(out)
    assert code == 0 and report["size"] == 28 and len(report["atoms"]) == 10


def test_verify_require_complete(capsys):
    assert call(capsys, "lattice", "verify", "-g", "e1,e2", "--require-complete")[0] == 2
    assert call(capsys, "lattice", "verify", "-g", "e", "--require-complete")[0] == 0


def test_verify_axiom_failure_exit_2(capsys, tmp_path):
    bad = {"elements": [
        {"id": 0, "term": "0", "ortho": 3, "covers": []},
        {"id": 1, "term": "a", "ortho": 2, "covers": [0]},
        {"id": 2, "term": "a'", "ortho": 1, "covers": [1]},
        {"id": 3, "term": "1", "ortho": 0, "covers": [2]},
    ], "zero_meets": []}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = call(capsys, "lattice", "verify", "--in", str(path))
    assert code == 2
    assert json.loads(out)["complement_laws_ok"] is False


def test_complete(capsys):
    code, out, _ = call(capsys, *(["lattice", "complete"] + PET_ARGS[2:]), "--format", "json")
    assert code == 0 and json.loads(out)["size"] == 66
    code, out, _ = call(capsys, "lattice", "complete", "-g", "e1,e2", "--format", "dot")
    assert code == 0 and out.count("style=dashed") == 2


def test_rank(capsys):
    code, out, _ = call(capsys, "scop", "rank", "--context", "e1")
    assert code == 0
    assert out.splitlines()[0] == "dog 0.50"
    assert out.splitlines()[1] == "cat 0.25"
    code, out, _ = call(capsys, "scop", "rank", "--context", "e6", "--json")
    assert json.loads(out)[0] == {"exemplar": "goldfish", "frequency": 0.48}


def test_rank_fixtures_dir(capsys, tmp_path):
    from scop.ingest import fixtures_dir
    code, out, _ = call(capsys, "scop", "rank", "--context", "e4", "--fixtures", str(fixtures_dir()))
    assert out.splitlines()[0] == "spider 0.23"
    code, _, err = call(capsys, "scop", "rank", "--context", "e4", "--fixtures", str(tmp_path))
    assert code == 1 and err.count("\n") == 1


def test_weights_eigen_super(capsys, tmp_path):
    assert call(capsys, "scop", "weights", "--state", "p_hat", "--property", "a1")[1] == "a1 0.94\n"
    assert len(call(capsys, "scop", "weights", "--state", "p1")[1].splitlines()) == 14
    assert call(capsys, "scop", "eigen", "--scop", "garden", "--context", "e3", "--state", "p10")[1] == "true\n"
    assert call(capsys, "scop", "eigen", "--context", "e2", "--json")[1] == '["p2"]\n'
    assert call(capsys, "scop", "super", "--scop", "garden", "--state", "p11", "--contexts", "e7,e10")[1] == "true\n"
    path = tmp_path / "g.json"
    path.write_text(json.dumps(garden_dict()))
    assert call(capsys, "scop", "super", "--scop", str(path), "--state", "p3",
                "--contexts", "e3", "--contexts", "e10")[1] == "false\n"


def test_build(capsys):
    code, out, _ = call(capsys, "scop", "build")
    data = json.loads(out)
    assert code == 0 and len(data["states"]) == 7 and len(data["properties"]) == 14
    computed = json.loads(call(capsys, "scop", "build", "--computed")[1])
    ground = next(s for s in computed["states"] if s["ground"])
    assert ground["frequencies"]["dog"] == pytest.approx(6.65 / 56.28)


def _column(path, values, header=None):
    lines = ([header] if header else []) + [str(v) for v in values]
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_ttest(capsys, tmp_path):
    f1 = _column(tmp_path / "a.csv", [1, 2, 3, 4], header="score")
    code, out, _ = call(capsys, "stats", "ttest", "--a", f1, "--b", f1)
    res = json.loads(out)
    assert code == 0 and res["p"] == 1.0 and res["degenerate"] is True
    f2 = _column(tmp_path / "b.csv", [2, 3, 4, 5])
    res = json.loads(call(capsys, "stats", "ttest", "--a", f2, "--b", f1)[1])
    assert res["t"] == "inf" and res["p"] == 0.0 and res["df"] == 3


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["lattice", "gen"],
    ["lattice", "gen", "-g", "e1,e1"],
    ["lattice", "gen", "-g", "e1", "-z", "e1^e9"],
    ["lattice", "gen", "-g", "e1", "--format", "svg"],
    ["lattice", "verify", "--in", "/nonexistent.json"],
    ["scop", "rank", "--context", "e99"],
    ["scop", "weights", "--state", "nope"],
    ["scop", "eigen", "--scop", "/nonexistent.json", "--context", "e1"],
    ["stats", "ttest", "--a", "/nonexistent", "--b", "/nonexistent"],
])
def test_errors_exit_1(capsys, argv):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 1
    assert err.strip() and "Traceback" not in err


def test_ttest_bad_value(capsys, tmp_path):
    f1 = _column(tmp_path / "a.csv", ["1", "x", "3"])
    code, _, err = call(capsys, "stats", "ttest", "--a", f1, "--b", f1)
    assert code == 1 and "non-numeric" in err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "scop", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 1 and "usage" in proc.stderr and "Traceback" not in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "scop", *PET_ARGS], capture_output=True, text=True)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)["elements"]) == 28
