import subprocess
import sys

import pytest

from maglab.cli import main
from maglab.fileio import parse_graph, read_labelling
from maglab.generators import wheel


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_wheel_with_faces(capsys):
    code, out, _ = run(["gen", "wheel", "5", "--faces"], capsys)
    assert code == 0
    assert parse_graph(out) == wheel(5, faces=True)
    assert out.splitlines()[0] == "graph 6 10 5"


def test_solve_and_verify(tmp_path, capsys):
    gpath, lpath = tmp_path / "c5.txt", tmp_path / "c5.lab"
    assert run(["gen", "cycle", "5", "-o", str(gpath)], capsys)[0] == 0
    code, _, _ = run(["solve", "--graph", str(gpath), "--v", "--e", "--target", "edges", "--kind", "magic",
                      "--seed", "1", "-o", str(lpath)], capsys)
    assert code == 0
    code, out, _ = run(["verify", "--graph", str(gpath), str(lpath)], capsys)
    assert code == 0 and "magic" in out


def test_k2_trivial_solve(tmp_path, capsys):
    gpath = tmp_path / "k2.txt"
    gpath.write_text("graph 2 1 0\ne 1 2\n")
    code, out, _ = run(["solve", "--graph", str(gpath), "--v", "--e", "--target", "edges", "--kind", "magic",
                        "--max-iters", "10"], capsys)
    assert code == 0
    assert "attest magic 6" in out and "meta iterations 0" in out


def _tamper(text, swap_lines):
    lines = text.splitlines()
    (i, a), (j, b) = [(k, l) for k, l in enumerate(lines) if l.startswith(swap_lines)]
    la, lb = a.split(), b.split()
    lines[i] = f"{la[0]} {la[1]} {lb[2]}"
    lines[j] = f"{lb[0]} {lb[1]} {la[2]}"
    return "\n".join(lines) + "\n"


def test_verify_catches_edits(tmp_path, capsys):
    gpath, lpath = tmp_path / "p.txt", tmp_path / "p.lab"
    run(["gen", "petersen", "-o", str(gpath)], capsys)
    code, _, _ = run(["solve", "--graph", str(gpath), "--v", "--e", "--super", "--target", "edges", "--kind",
                      "magic", "--seed", "0", "--runs", "16", "-o", str(lpath)], capsys)
    assert code == 0
    text = lpath.read_text()
    # swap the labels of two vertices by hand
    bad = tmp_path / "swapped.lab"
    bad.write_text(_tamper(text, ("v 1 ", "v 2 ")))
    code, out, _ = run(["verify", "--graph", str(gpath), str(bad)], capsys)
    assert code == 1 and "wt(" in out
    # a repeated label breaks the bijection
    lines = text.splitlines()
    v1 = next(l for l in lines if l.startswith("v 1 "))
    v2 = next(l for l in lines if l.startswith("v 2 "))
    dup = tmp_path / "dup.lab"
    dup.write_text(text.replace(v2 + "\n", "v 2 " + v1.split()[2] + "\n"))
    code, out, _ = run(["verify", "--graph", str(gpath), str(dup)], capsys)
    assert code == 1


def test_oracle_exit_codes(capsys):
    code, out, _ = run(["oracle", "--gen", "complete", "2", "--e", "--target", "vertices", "--kind", "antimagic"],
                       capsys)
    assert code == 1 and "exhausted-with-none" in out
    code, out, _ = run(["oracle", "--gen", "cycle", "3", "--v", "--e", "--target", "edges", "--kind", "magic"],
                       capsys)
    assert code == 0 and "k=9" in out
    code, _, _ = run(["oracle", "--gen", "complete", "5", "--v", "--e", "--target", "vertices", "--kind", "magic",
                      "--budget", "100"], capsys)
    assert code == 4


def test_export_ilp(tmp_path, capsys):
    code, out, _ = run(["export-ilp", "--gen", "complete", "3", "--v", "--e", "--target", "edges", "--K", "12"],
                       capsys)
    assert code == 0 and out.startswith("\\") and "Binary" in out
    code, _, _ = run(["export-ilp", "--gen", "cycle", "3", "--v", "--e", "--target", "edges", "--K", "sweep",
                      "-o", str(tmp_path / "sweep")], capsys)
    assert code == 0 and (tmp_path / "sweep" / "model_K10.lp").exists()


@pytest.mark.parametrize("argv, expected", [
    ([], 2),
    (["solve", "--gen", "cycle", "3", "--target", "edges", "--kind", "magic"], 2),
    (["solve", "--gen", "cycle", "3", "--e", "--super", "--target", "edges", "--kind", "magic"], 2),
    (["solve", "--gen", "cycle", "3", "--v", "--target", "edges", "--kind", "ad"], 2),
    (["solve", "--gen", "cycle", "3", "--v", "--target", "nodes", "--kind", "magic"], 2),
    (["solve", "--gen", "cycle", "x", "--v", "--target", "edges", "--kind", "magic"], 2),
    (["export-ilp", "--gen", "cycle", "3", "--v", "--target", "edges", "--K", "abc"], 2),
    (["solve", "--gen", "nosuch", "--v", "--target", "edges", "--kind", "magic"], 3),
    (["solve", "--graph", "/nonexistent/file", "--v", "--target", "edges", "--kind", "magic"], 3),
    (["solve", "--gen", "cycle", "3", "--f", "--target", "faces", "--kind", "magic"], 3),
    (["export-ilp", "--gen", "cycle", "3", "--v", "--target", "edges", "--kind", "antimagic", "--K", "3"], 3),
    (["solve", "--gen", "complete", "4", "--e", "--target", "vertices", "--kind", "magic", "--max-iters", "200"], 1),
])
def test_exit_codes(argv, expected, capsys):
    assert run(argv, capsys)[0] == expected


def test_detect_ad(capsys):
    code, out, _ = run(["solve", "--gen", "path", "4", "--v", "--e", "--target", "edges", "--kind", "ad",
                        "--detect-ad", "--max-iters", "20000"], capsys)
    assert code == 0 and "attest ad" in out


def test_bench_guardrail_and_csv(tmp_path, capsys):
    code, _, _ = run(["bench", "kn-super-vmt", "--values", "20", "--runs", "1"], capsys)
    assert code == 2
    outs = []
    for _ in range(2):
        path = tmp_path / f"b{len(outs)}.csv"
        code, _, _ = run(["bench", "p3power-antimagic", "--values", "1", "2", "--runs", "3", "--no-wall-time",
                          "-o", str(path), "--fit"], capsys)
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].decode().splitlines()[0] == "family,param,seed,iterations,accepted,wall_time,solved"


COMMANDS = [
    ["gen", "wheel", "6", "--faces"],
    ["solve", "--gen", "petersen", "--v", "--e", "--super", "--target", "edges", "--kind", "magic", "--runs", "16"],
    ["oracle", "--gen", "cycle", "3", "--v", "--e", "--target", "edges", "--kind", "magic", "--mode", "enumerate",
     "--limit", "3"],
    ["export-ilp", "--gen", "path", "3", "--v", "--e", "--target", "edges", "--K", "8"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
def test_runs_are_reproducible(argv):
    cmd = [sys.executable, "-m", "maglab", *argv]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
