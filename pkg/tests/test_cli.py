import os
import subprocess
import sys
from pathlib import Path

import pytest

from linarr.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
EDGES = str(DATA / "sentence17.edges")
ARR = str(DATA / "sentence17.arr")
CONLLU = str(DATA / "collection.conllu")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_moments(capsys):
    code, out = run(capsys, "moments", EDGES)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "key,value,decimal"
    assert "e_d,96,96.0" in lines
    assert "e_d2,47164/5,9432.8" in lines
    assert "var_d,1084/5,216.8" in lines
    assert "f0,184,184.0" in lines and "f2,16,16.0" in lines


def test_bounds(capsys):
    code, out = run(capsys, "bounds", EDGES)
    assert code == 0
    lines = out.splitlines()
    assert "upper_dm,242,242.0" in lines
    assert "upper_em,211,211.0" in lines
    assert "upper,211,211.0" in lines
    assert "minla_lower,16,16.0" in lines


def test_sig_by_value_and_by_arrangement(capsys):
    code1, out1 = run(capsys, "sig", EDGES, "--D", "40")
    assert code1 == 0
    code2, out2 = run(capsys, "sig", EDGES, "--arrangement", ARR)
    assert code2 == 0
    assert out1 == out2
    z = repr(-3.8032807744691284)
    assert f"z,{z},{z}" in out1.splitlines()
    assert "cantelli_p_upper,271/4191," + repr(271 / 4191) in out1.splitlines()


def test_sig_mc_deterministic(capsys):
    code, out1 = run(capsys, "sig", EDGES, "--D", "40", "--mc", "300",
                     "--seed", "4")
    assert code == 0
    _, out2 = run(capsys, "sig", EDGES, "--D", "40", "--mc", "300",
                  "--seed", "4")
    assert out1 == out2
    assert any(line.startswith("mc_p,") for line in out1.splitlines())


def test_treebank_cli(capsys):
    code, out = run(capsys, "treebank", CONLLU, "--exclude-punct",
                    "--skip-degenerate")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("label,n,m,")
    assert len(lines) == 5  # header + 3 sentences + summary
    assert lines[-1].startswith("__collection__,")


def test_treebank_degenerate_exit(capsys):
    code = main(["treebank", CONLLU, "--exclude-punct"])
    capsys.readouterr()
    assert code == 4  # two-word sentence has zero variance


def test_ensemble_gnm_deterministic(capsys):
    argv = ["ensemble", "gnm", "--n", "6", "--mc", "200", "--seed", "12"]
    code, out1 = run(capsys, *argv)
    assert code == 0
    _, out2 = run(capsys, *argv)
    assert out1 == out2
    assert out1.splitlines()[0].startswith("parameter,exact,")


def test_ensemble_tree(capsys):
    code, out = run(capsys, "ensemble", "tree", "--n-list", "3,5")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("3,2/9,")
    assert lines[2].startswith("5,66/25,")


def test_hubiness_sweep(capsys):
    code, out = run(capsys, "hubiness", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("sum_k2,h,")
    assert lines[1].split(",")[0] == "14"  # 4n - 6
    assert lines[-1].split(",")[0] == "20"  # n(n-1)


def test_hubiness_small_n_rejected(capsys):
    assert main(["hubiness", "--n", "3"]) == 2
    capsys.readouterr()


def test_oracle_cap_exit(capsys):
    assert main(["oracle", EDGES]) == 3  # 17! arrangements is over the cap
    capsys.readouterr()


def test_oracle_distribution(tmp_path, capsys):
    p = tmp_path / "p3.edges"
    p.write_text("3 2\n1 2\n2 3\n")
    code, out = run(capsys, "oracle", str(p))
    assert code == 0
    assert out == (
        "d,count,cum_p,cum_p_float\n"
        "2,2,1/3,0.3333333333333333\n"
        "3,4,1,1.0\n"
    )


def test_sig_zero_variance_exit(tmp_path, capsys):
    p = tmp_path / "k4.edges"
    p.write_text("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    assert main(["sig", str(p), "--D", "10"]) == 4
    capsys.readouterr()


def test_missing_file_exit(capsys):
    assert main(["moments", "/nonexistent/file.edges"]) == 2
    capsys.readouterr()


def test_selftest(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert out.splitlines()[-1] == "selftest: ok"


def test_help_exits_zero():
    with pytest.raises(SystemExit) as e:
        main(["--help"])
    assert e.value.code == 0


def test_backend_flag(capsys):
    code, out = run(capsys, "--backend")
    assert code == 0
    assert out.strip() in ("native", "python")


def test_pure_python_subprocess_identical(capsys):
    argv = ["ensemble", "gnm", "--n", "7", "--mc", "100", "--seed", "3"]
    _, native_out = run(capsys, *argv)
    env = dict(os.environ, LINARR_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-m", "linarr.cli", *argv],
        capture_output=True, text=True, env=env, check=True)
    assert proc.stdout == native_out
