from __future__ import annotations

import csv
import io
import json

import jsonschema
import pytest

from hermcode import cli, picard, report
from hermcode.weight import DistanceResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    payload = json.loads(out)
    schema = report.load_schema(payload["kind"].replace("-", "_"))
    jsonschema.validate(payload, schema)
    return payload


def test_zeta(capsys):
    p = run_json(capsys, "zeta", "--q", "2", "--kmax", "2")
    assert p["class_number"] == 9 and p["A"] == [1, 9, 45]
    assert run_json(capsys, "zeta", "--q", "3", "--kmax", "0")["A"] == [1]
    code, _, err = run(capsys, "zeta", "--q", "6", "--kmax", "2")
    assert code == 2 and "not a prime power" in err
    assert run(capsys, "zeta", "--q", "2", "--kmax", "-1")[0] == 2
    assert run(capsys, "zeta", "--q", "2", "--kmax", "20000")[0] == 3


def test_code(capsys):
    p = run_json(capsys, "code", "--q", "2", "--t", "5", "--exact-distance")
    assert (p["n"], p["k"], p["yang_kumar_band"], p["d_exact"]) == (8, 5, [3, 5], 3)
    p = run_json(capsys, "code", "--q", "2", "--t", "0", "--exact-distance", "--matrix")
    assert (p["n"], p["k"], p["d_exact"]) == (8, 1, 8)
    assert p["generator_matrix"][0]["entries"] == ["1:0"] * 8
    assert run(capsys, "code", "--q", "3", "--t", "30")[0] == 2
    assert run(capsys, "code", "--q", "3")[0] == 2
    code, _, err = run(capsys, "code", "--q", "3", "--t", "14", "--exact-distance")
    assert code == 3 and "--force-size" in err


def test_prospect(capsys):
    rows = run_json(capsys, "prospect", "--q", "2", "--criterion", "exact", "--l", "6")["rows"]
    assert [(r["l"], r["t"], r["k"]) for r in rows] == [(1, 0, 1)]
    assert run_json(capsys, "prospect", "--q", "2", "--criterion", "prop23", "--l", "7")["rows"] == []
    assert run_json(capsys, "prospect", "--q", "4", "--criterion", "prop23", "--l", "32")["rows"] == []
    full = run_json(capsys, "prospect", "--q", "2", "--criterion", "exact")
    assert len(full["rows"]) == 3
    assert run(capsys, "prospect", "--q", "17")[0] == 3
    assert run(capsys, "prospect", "--q", "2", "--l", "99")[0] == 2
    code, out, _ = run(capsys, "prospect", "--q", "3", "--format", "text")
    assert code == 0 and "g - q" in out


def test_verify_lemma(capsys):
    p = run_json(capsys, "verify-lemma", "--q", "2", "--eval", "4", "--s", "1", "--m", "1")
    assert p["status"] == "pass" and p["d_exact"] == 4
    p = run_json(capsys, "verify-lemma", "--q", "2", "--eval", "4", "--s", "3", "--m", "1")
    assert p["status"] == "no-unhit-class" and p["class"] is None
    assert run(capsys, "verify-lemma", "--q", "3", "--s", "1", "--m", "1")[0] == 2
    assert run(capsys, "verify-lemma", "--q", "2", "--eval", "4", "--s", "5", "--m", "1")[0] == 2
    assert run(capsys, "verify-lemma", "--q", "2", "--eval", "4")[0] == 2


def test_verify_lemma_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(picard, "min_distance_exact", lambda code, **kw: DistanceResult(1, 0, ()))
    code, _, err = run(capsys, "verify-lemma", "--q", "2", "--eval", "4", "--s", "1", "--m", "1")
    assert code == 4 and "verification failed" in err


@pytest.mark.parametrize("q", [4, 16])
def test_asymptotic(capsys, q):
    p = run_json(capsys, "asymptotic", "--q", str(q))
    assert p["l"] == 2
    assert p["k_plus_d_lower"] == p["n"] + p["t"] - p["genus"] + 2
    assert p["k_positive"] == (p["k"] >= 1)


def test_asymptotic_rejects_small_q(capsys):
    assert run(capsys, "asymptotic", "--q", "2")[0] == 2


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["zeta", "--q", "2", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["zeta"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["zeta", "--q", "2", "--format", "xml"])
    assert exc.value.code == 2
    assert run(capsys, "code", "--q", "2", "--t", "3", "--workers", "0")[0] == 2


CSV_RUNS = [
    ("zeta", "--q", "3", "--kmax", "6"),
    ("code", "--q", "2", "--t", "4"),
    ("prospect", "--q", "3"),
    ("verify-lemma", "--q", "2", "--s", "2", "--m", "1"),
    ("asymptotic", "--q", "8"),
]


@pytest.mark.parametrize("argv", CSV_RUNS, ids=lambda a: a[0])
def test_csv_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    assert buf.getvalue() == out
    assert len({len(r) for r in rows}) == 1


@pytest.mark.parametrize("argv", CSV_RUNS, ids=lambda a: a[0])
def test_text_format(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "text")
    assert code == 0 and out.endswith("\n")


def test_out_file(capsys, tmp_path):
    target = tmp_path / "z.json"
    code, out, _ = run(capsys, "zeta", "--q", "2", "--kmax", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["A"] == [1, 9, 45, 189]


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "hermcode", "zeta", "--q", "2", "--kmax", "1"], capture_output=True, text=True
    )
    assert res.returncode == 0 and json.loads(res.stdout)["A"] == [1, 9]
