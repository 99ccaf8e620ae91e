import json
import subprocess
import sys

import pytest

from tribreak.cli import EXIT_DATA, EXIT_INFEASIBLE, EXIT_USAGE, main

BOWTIE = "# toy\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n"


@pytest.fixture
def bowtie_file(tmp_path):
    p = tmp_path / "bowtie.txt"
    p.write_text(BOWTIE)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys, bowtie_file):
    code, out, _ = run(capsys, "count", bowtie_file)
    assert code == 0 and json.loads(out) == {"n": 5, "m": 6, "total_triangles": 2}
    code, out, _ = run(capsys, "count", "--list", bowtie_file)
    assert out == "a,b,c\n0,1,2\n2,3,4\n"


def test_break_node_schema(capsys, bowtie_file):
    code, out, _ = run(capsys, "break-node", "--k", "2", "--bound", bowtie_file)
    d = json.loads(out)
    assert code == 0
    assert set(d) == {"method", "k", "selected", "gains", "cumulative", "total_triangles", "bound", "runtime_ms"}
    assert d["selected"][0] == 2 and d["gains"] == [2, 0]
    assert d["bound"]["ratio"] == 1.0 and d["bound"]["upper_bound"] == 2


def test_break_edge_pairs_and_csv(capsys, bowtie_file):
    _, out, _ = run(capsys, "break-edge", "--k", "2", bowtie_file)
    assert json.loads(out)["selected"] == [[0, 1], [2, 3]]
    _, out, _ = run(capsys, "--format", "csv", "break-edge", "--k", "2", bowtie_file)
    assert out.splitlines() == ["step,selected,gain,cumulative", "1,0-1,1,1", "2,2-3,1,2"]
    # global flags also accepted after the subcommand
    _, out2, _ = run(capsys, "break-edge", "--k", "2", "--format", "csv", bowtie_file)
    assert out2 == out


def test_min_p(capsys, bowtie_file):
    code, out, _ = run(capsys, "break-node", "--min-p", "2", bowtie_file)
    d = json.loads(out)
    assert code == 0 and d["cumulative"][-1] >= 2 and d["k"] == 1 and d["p"] == 2


def test_baseline_and_oracle(capsys, bowtie_file):
    code, out, _ = run(capsys, "baseline", "--method", "maxdeg", "--k", "1", bowtie_file)
    assert code == 0 and json.loads(out)["selected"] == [2]
    code, out, _ = run(capsys, "--seed", "5", "baseline", "--method", "random", "--target", "edge",
                       "--k", "3", bowtie_file)
    d = json.loads(out)
    assert d["seed"] == 5 and len(d["selected"]) == 3 and d["bound"] is None
    code, out, _ = run(capsys, "oracle", "--k", "1", bowtie_file)
    assert json.loads(out) == {"target": "node", "k": 1, "best_set": [2], "opt_value": 2}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["break-node", "--min-p", "9", "{f}"], EXIT_INFEASIBLE),
        (["break-node", "--k", "99", "{f}"], EXIT_USAGE),
        (["break-node", "{f}"], EXIT_USAGE),
        (["break-node", "--k", "1", "--min-p", "1", "{f}"], EXIT_USAGE),
        (["count", "{missing}"], EXIT_DATA),
        (["count", "{bad}"], EXIT_DATA),
        (["bench"], EXIT_USAGE),
        (["bench", "--file", "{f}", "--methods", "dak,magic"], EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, tmp_path, bowtie_file, argv, expected):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\nfoo bar\n")
    subs = {"f": bowtie_file, "missing": str(tmp_path / "nope.txt"), "bad": str(bad)}
    code, _, err = run(capsys, *[a.format(**subs) for a in argv])
    assert code == expected and err.startswith("tribreak:")


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE


def test_missing_dataset_is_data_error(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TRIBREAK_DATA", str(tmp_path))
    code, _, err = run(capsys, "bench", "--dataset", "gnutella04")
    assert code == EXIT_DATA and "curl" in err


def test_out_flag(capsys, tmp_path, bowtie_file):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, "--out", str(target), "count", bowtie_file)
    assert code == 0 and out == "" and json.loads(target.read_text())["total_triangles"] == 2


def test_gen_roundtrip(capsys, tmp_path):
    _, out, _ = run(capsys, "--seed", "2", "gen", "--m", "500")
    f = tmp_path / "g.txt"
    f.write_text(out)
    _, counted, _ = run(capsys, "count", str(f))
    assert json.loads(counted)["m"] == len(out.splitlines())
    _, again, _ = run(capsys, "--seed", "2", "gen", "--m", "500")
    assert again == out


def test_bench_on_file(capsys, bowtie_file):
    code, out, _ = run(capsys, "bench", "--file", bowtie_file, "--k-grid", "1,2", "--methods", "dak,random")
    d = json.loads(out)
    assert code == 0 and [r["method"] for r in d["results"]] == ["dak-n", "random"]
    assert d["results"][0]["broken"] == [2, 2]


def test_module_entry_point(bowtie_file):
    proc = subprocess.run([sys.executable, "-m", "tribreak", "count", bowtie_file],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["total_triangles"] == 2
