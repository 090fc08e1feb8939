import dataclasses
import json
import subprocess
import sys

import pytest

from nihocodes import cli, golden
from nihocodes.distribution import WeightDistribution
from nihocodes.params import CodeSpec

EX11 = "--family 1 --p 2 --l 2 --m 2 --h 1 --f 3".split()


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_derive_example(capsys):
    code, out, _ = run(capsys, "derive", *EX11, "--t", "1")
    assert code == 0
    assert "n=85" in out and "k=6" in out and "exponents 51,66" in out


def test_derive_failure_exit_2(capsys):
    code, out, _ = run(capsys, "derive", *EX11, "--t", "9")
    assert code == 2 and "(a) fail" in out


def test_derive_family2(capsys):
    code, out, _ = run(capsys, "derive", "--json", *"--family 2 --p 2 --l 3 --m 1 --h 2 --f 14 --t 1".split())
    data = json.loads(out)
    # 70 is stored reduced modulo r^2 - 1 = 63
    assert code == 0 and (data["n"], data["k"], data["exponents"]) == (9, 2, [7])
    assert data["raw_exponents"] == [70]
    assert data["conditions"]["passed"]


def test_verify_equal(capsys):
    code, out, _ = run(capsys, "verify", *"--family 1 --p 2 --l 3 --m 1 --h 1 --f 7 --t 3".split())
    assert code == 0 and "brute-force: equal" in out


def test_verify_skips_large_without_long_run(capsys):
    code, out, _ = run(capsys, "verify", *EX11, "--t", "3")
    assert code == 0 and "enumeration skipped" in out
    assert "1+185640Y^{44}" in out


def test_verify_mismatch_exit_3(capsys, monkeypatch):
    real = cli.solve_distribution

    def tampered(spec):
        d = real(spec)
        f = dict(d.frequencies)
        f[60] -= 1
        f[64] += 1
        return dataclasses.replace(d, frequencies=f)

    monkeypatch.setattr(cli, "solve_distribution", tampered)
    code, out, _ = run(capsys, "verify", *EX11, "--t", "1")
    assert code == 3 and "MISMATCH at weight 60" in out


def test_dist_table_json_roundtrip(capsys, tmp_path):
    path = tmp_path / "d.json"
    code, out, _ = run(capsys, "dist", "--method", "table", "--json", "--out", str(path),
                       *"--family 2 --p 2 --l 2 --m 2 --h 2 --f 6 --t 2".split())
    assert code == 0
    data = json.loads(out)
    assert data["enumerator"] == "1+10200Y^56+4080Y^60+30855Y^64+20400Y^68"
    assert data["method"] == "corollary-table"
    assert json.loads(path.read_text()) == data
    assert WeightDistribution.from_json(out).to_dict() == data
    for key in ("family", "p", "l", "m", "h", "f", "t", "n", "k", "d", "delta", "e", "weights"):
        assert key in data
    assert all(isinstance(w["freq"], str) for w in data["weights"])


def test_dist_text_uses_braced_enumerator(capsys):
    code, out, _ = run(capsys, "dist", *EX11, "--t", "1")
    assert code == 0 and out.strip().endswith("1+2040Y^{60}+255Y^{64}+1800Y^{68}")


@pytest.mark.parametrize("method", ["brute", "accel", "vandermonde"])
def test_dist_methods_agree(capsys, method):
    code, out, _ = run(capsys, "dist", "--json", "--method", method, *EX11, "--t", "2")
    assert code == 0
    assert json.loads(out)["enumerator"] == golden.find_example("1.1(2)").enumerator.replace("{", "").replace("}", "")


def test_workers_do_not_change_output(capsys):
    outs = []
    for w in ("1", "2"):
        code, out, _ = run(capsys, "dist", "--json", "--method", "brute", "--workers", w, *EX11, "--t", "2")
        outs.append(out)
    assert outs[0] == outs[1]


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dist", "--family", "1"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 1
    code, _, err = run(capsys, "dist", "--method", "table", *EX11, "--t", "2")
    assert code == 1 and "no closed-form table" in err
    code, _, _ = run(capsys, "dist", "--method", "brute", *EX11, "--t", "3")
    assert code == 1
    code, _, _ = run(capsys, "derive", *"--family 1 --p 4 --l 1 --m 1 --h 1 --f 1 --t 1".split())
    assert code == 1


def test_inadmissible_exit_2(capsys):
    code, _, err = run(capsys, "dist", *EX11, "--t", "9")
    assert code == 2 and "inadmissible" in err


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert len(data["rows"]) == len(golden.EXAMPLES) + len(golden.TABLE_ROWS)
    by_nkd = {tuple(r["nkd"]) for r in data["rows"]}
    assert {(12, 3, 8), (16, 4, 10), (182, 9, 108), (91, 6, 54), (85, 12, 48)} <= by_nkd


def test_tables_mismatch_exit_3(capsys, monkeypatch):
    bad = golden.GoldenRow("ex1", CodeSpec(1, 5, 1, 1, 1, 1, 1), (12, 3, 9), "Y")
    monkeypatch.setattr(golden, "TABLE_ROWS", golden.TABLE_ROWS + (bad,))
    code, out, _ = run(capsys, "tables")
    assert code == 3 and "FAIL" in out


def test_tower_dump(capsys):
    code, out, _ = run(capsys, "tower", "--p", "2", "--l", "2", "--m", "2")
    assert code == 0 and json.loads(out)["modulus"] == [1, 1, 0, 1, 1, 0, 0, 0, 1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nihocodes.cli", "derive", *EX11, "--t", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "n=85" in res.stdout
