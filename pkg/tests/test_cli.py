import json
import subprocess
import sys

from cellres.cli import main

RUNNING = "x1*x2, x1*x3, x1*x5, x2*x3, x2*x5, x3*x5, x4*x5"
EXAMPLE1 = "x1*x3*x4, x1*x3*x5, x1*x2*x4, x1*x4*x5, x2*x3*x4, x2*x3*x5"


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_example1(capsys):
    code, out, _ = run_cli(["check", EXAMPLE1], capsys)
    assert code == 0
    assert "linear quotients: yes" in out
    assert "colon j=6: x1, x4" in out
    assert "regular: yes" in out
    assert "cointerval: no" in out


def test_check_running(capsys):
    code, out, _ = run_cli(["check", RUNNING], capsys)
    assert code == 0
    assert "cointerval: yes" in out
    assert "exchange reading" in out  # the discrepancy is surfaced


def test_check_not_lq(capsys):
    code, out, _ = run_cli(["check", "x1*x2, x3*x4"], capsys)
    assert code == 1
    assert "linear quotients: no (witness j=2" in out


def test_check_malformed(capsys):
    code, _, err = run_cli(["check", "x1*blah"], capsys)
    assert code == 2
    assert "input error" in err


def test_check_require_cointerval(capsys):
    code, _, _ = run_cli(["check", "--require", "cointerval", EXAMPLE1], capsys)
    assert code == 1


def test_resolve_ht_json(capsys, tmp_path):
    out_path = tmp_path / "cx.json"
    betti_path = tmp_path / "b.csv"
    code, _, _ = run_cli(
        ["resolve", RUNNING, "--out", str(out_path), "--betti-csv", str(betti_path)],
        capsys,
    )
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["ranks"] == [1, 7, 11, 6, 1]
    lines = betti_path.read_text().splitlines()
    assert lines[0] == "i,e1,e2,e3,e4,e5,value"
    assert len(lines) > 5


def test_resolve_taylor(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, _, _ = run_cli(
        ["resolve", RUNNING, "--method", "taylor", "--out", str(out_path)], capsys
    )
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["ranks"] == [1, 7, 21, 35, 35, 21, 7, 1]


def test_resolve_hom_rejects_noncointerval(capsys):
    code, _, err = run_cli(["resolve", EXAMPLE1, "--method", "hom"], capsys)
    assert code == 1
    assert "NotCointerval" in err


def test_complex_ek_json(capsys, tmp_path):
    out_path = tmp_path / "ek.json"
    code, _, _ = run_cli(["complex", RUNNING, "--out", str(out_path)], capsys)
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["f_vector"] == [7, 11, 6, 1]


def test_complex_hom_json(capsys, tmp_path):
    out_path = tmp_path / "hom.json"
    code, _, _ = run_cli(
        ["complex", RUNNING, "--method", "hom", "--out", str(out_path)], capsys
    )
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["f_vector"] == [7, 11, 6, 1]
    dims = [c["dim"] for c in data["cells"]]
    assert dims.count(3) == 1


def test_complex_off_export(capsys):
    code, out, _ = run_cli(
        ["complex", "x1, x2, x3", "--method", "ek", "--format", "off"], capsys
    )
    assert code == 0
    assert out.startswith("OFF\n")
    header = out.splitlines()[2].split()
    assert header[0] == "3"  # three vertices


def test_betti_csv(capsys):
    code, out, _ = run_cli(["betti", "x1, x2"], capsys)
    assert code == 0
    assert "i,e1,e2,value" in out


def test_enumerate_rules(capsys):
    code, out, _ = run_cli(["enumerate-rules", RUNNING], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["distinct_types"] >= 2


def test_enumerate_rules_maximal(capsys):
    code, out, _ = run_cli(["enumerate-rules", "x1, x2, x3, x4"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["rules"]) == 1 and data["distinct_types"] == 1


def test_verify_running(capsys):
    code, out, _ = run_cli(["verify", RUNNING], capsys)
    assert code == 0
    assert "FAIL" not in out
    assert "exchange reading disagrees" in out


def test_verify_no_prefilter(capsys):
    code, out, _ = run_cli(["verify", "--no-prefilter", EXAMPLE1], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_gen_corpus_output(capsys, tmp_path):
    out_path = tmp_path / "corpus.jsonl"
    code, _, _ = run_cli(
        [
            "gen-corpus",
            "--out",
            str(out_path),
            "--stable-n",
            "3",
            "--stable-deg",
            "2",
            "--cointerval-d",
            "2",
            "--cointerval-n",
            "4",
        ],
        capsys,
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert all(json.loads(ln)["kind"] in {"stable", "cointerval", "example"} for ln in lines)


def test_dgraph_file_input(capsys, tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("2 5\n1 2\n1 3\n1 5\n2 3\n2 5\n3 5\n4 5\n")
    code, out, _ = run_cli(["check", str(path)], capsys)
    assert code == 0
    assert "cointerval: yes" in out


def test_json_ideal_input(capsys):
    blob = json.dumps({"n": 3, "gens": [[1, 1, 0], [1, 0, 1]]})
    code, out, _ = run_cli(["check", blob], capsys)
    assert code == 0
    assert "linear quotients: yes" in out


def test_resolve_prime_env_override(capsys, monkeypatch):
    monkeypatch.setenv("RESOLVE_PRIME", "1048589")
    code, out, _ = run_cli(["verify", "x1*x2, x1*x3, x2*x3"], capsys)
    assert code == 0 and "FAIL" not in out


def test_determinism_byte_identical(tmp_path):
    cmd = [
        sys.executable,
        "-m",
        "cellres.cli",
        "resolve",
        RUNNING,
    ]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
