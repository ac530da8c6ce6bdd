import json

import pytest

from platdga import cli
from platdga.harness import random_plat
from platdga.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_info_trefoil_file(tmp_path, capsys):
    path = tmp_path / "trefoil.plat"
    path.write_text("plat 2 : 2 2 2\n")
    code, out = run(capsys, "info", str(path), "--rho", "0")
    assert code == 0
    assert out["tb"] == 1 and out["rotation"] == 0
    assert out["rho"]["0"]["chi_star"] == 1
    assert out["rho"]["0"]["degree_distribution"] == {"0": 3, "1": 2}


def test_info_atlas_name(capsys):
    code, out = run(capsys, "info", "unknot")
    assert code == 0 and out["tb"] == -1


def test_dga_json_form(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text('{"cusps": 1, "word": []}')
    code, out = run(capsys, "dga", str(path))
    assert code == 0
    assert out["differential"] == {"c1": []}


def test_augs(capsys):
    code, out = run(capsys, "augs", "trefoil", "--rho", "0")
    assert code == 0
    entry = out["rho"]["0"]
    assert entry["count"] == 5
    assert entry["aug_number"]["display"] == "5*2^(-1/2)"


def test_rulings(capsys):
    code, out = run(capsys, "rulings", "trefoil", "--rho", "0")
    assert code == 0
    entry = out["rho"]["0"]
    assert entry["count"] == 3
    assert entry["theta"] == [-1, 1, 1]
    assert entry["polynomial"] == {"-1": 1, "1": 2}


def test_correspond(capsys):
    code, out = run(capsys, "correspond", "trefoil", "--rho", "0")
    assert code == 0
    sizes = sorted(f["actual_size"] for f in out["rho"]["0"]["fibers"])
    assert sizes == [1, 2, 2]
    assert all(f["actual_size"] == f["expected_size"] for f in out["rho"]["0"]["fibers"])


def test_verify_single(capsys):
    code, out = run(capsys, "verify", "trefoil", "--rho", "0")
    assert code == 0 and out["ok"]


def test_verify_sweep(capsys):
    code, out = run(capsys, "verify", "--count", "5", "--seed", "4", "--cusps", "3", "--crossings", "7")
    assert code == 0 and out["ok"]
    assert out["version"] and out["count"] == 5


def test_random_deterministic(capsys):
    code, a = run(capsys, "random", "--cusps", "3", "--crossings", "6", "--seed", "11")
    assert code == 0
    code, b = run(capsys, "random", "--cusps", "3", "--crossings", "6", "--seed", "11")
    assert a["diagram"] == b["diagram"]


def test_exit_1_on_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.plat"
    path.write_text("plat 2 : 9\n")
    assert cli.main(["info", str(path)]) == 1
    assert cli.main(["info", str(tmp_path / "missing.plat")]) == 1
    link = tmp_path / "link.plat"
    link.write_text("plat 2 : 2 2\n")
    assert cli.main(["info", str(link)]) == 1


def test_exit_2_on_verification_failure(monkeypatch, capsys):
    broken = Report()
    broken.add("synthetic_check", False, "forced by the test")

    monkeypatch.setattr(cli, "full_check", lambda *a, **k: broken)
    assert cli.main(["verify", "trefoil"]) == 2


def test_exit_3_on_budget(tmp_path, capsys):
    d = random_plat(4, 30, seed=2)
    path = tmp_path / "big.plat"
    path.write_text(d.to_text())
    assert cli.main(["verify", str(path), "--disk-budget", "50"]) == 3
    assert cli.main(["augs", str(path), "--rho", "1", "--max-eligible", "5"]) == 3


def test_exit_3_on_random_give_up(capsys):
    assert cli.main(["random", "--cusps", "2", "--crossings", "0", "--seed", "1"]) == 3
