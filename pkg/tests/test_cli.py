import csv
import io
import json
import subprocess
import sys

import pytest

from qvoa import cli


def run(args, monkeypatch=None, cache=None):
    if monkeypatch is not None:
        if cache is None:
            monkeypatch.delenv("QVOA_CACHE", raising=False)
        else:
            monkeypatch.setenv("QVOA_CACHE", str(cache))
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(args, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_ok(monkeypatch):
    code, out, _ = run(["verify", "--n", "1", "--k", "1", "--order", "30"], monkeypatch)
    assert code == 0
    assert "status: verified" in out


def test_verify_level_zero(monkeypatch, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(["verify", "--n", "2", "--k", "0", "--order", "40", "--json", str(path)], monkeypatch)
    rec = json.loads(path.read_text())
    assert code == 0
    assert rec["coeffs"] == ["1"] + ["0"] * 40
    assert rec["status"] == "verified" and rec["first_mismatch"] is None


@pytest.mark.parametrize("args", [
    ["verify", "--n", "0", "--k", "1", "--order", "5"],
    ["verify", "--n", "1", "--k", "-1", "--order", "5"],
    ["qp", "--colors", "1", "--k", "0", "--order", "5"],
    ["rhs", "--k", "1", "--order", "5"],
    ["deform", "--family", "sp", "--epsilon", "1"],
    ["deform", "--family", "sp", "--n", "1", "--epsilon", "1/0"],
    ["wdim", "--n", "2", "--weight", "1"],
    ["lhs", "--n", "1", "--k", "1"],
    ["bogus"],
])
def test_usage_errors_exit_2(monkeypatch, args):
    code, _, err = run(args, monkeypatch)
    assert code == 2
    assert err


def test_mismatch_exit_1(monkeypatch):
    import qvoa.lhs

    real = qvoa.lhs.lhs_series

    def broken(n, k, order):
        s = real(n, k, order)
        return s + s.shift(3) - s.shift(3).shift(1) if order >= 4 else s

    monkeypatch.setattr(qvoa.lhs, "lhs_series", broken)
    code, out, _ = run(["verify", "--n", "1", "--k", "1", "--order", "8"], monkeypatch)
    assert code == 1
    assert "status: mismatch" in out and "first_mismatch: 3" in out
    assert "coeffs_rhs:" in out


def test_invariant_violation_exit_3(monkeypatch):
    import qvoa.nahm
    from qvoa.errors import IntegralityError

    def boom(*a, **k):
        raise IntegralityError("simulated")

    monkeypatch.setattr(qvoa.nahm, "nahm_series", boom)
    code, _, err = run(["rhs", "--n", "1", "--k", "1", "--order", "4"], monkeypatch)
    assert code == 3 and "invariant" in err


def test_rhs_and_qp_agree(monkeypatch):
    _, out_rhs, _ = run(["rhs", "--n", "1", "--k", "1", "--order", "6"], monkeypatch)
    _, out_qp, _ = run(["qp", "--colors", "1", "--k", "1", "--order", "6"], monkeypatch)
    assert "coeffs: 1 1 1 1 2 2 3\n" in out_rhs
    assert "coeffs: 1 1 1 1 2 2 3\n" in out_qp
    _, out_c, _ = run(["rhs", "--colors", "3", "--k", "1", "--order", "6"], monkeypatch)
    _, out_n, _ = run(["rhs", "--n", "2", "--k", "1", "--order", "6"], monkeypatch)
    assert out_c.splitlines()[-1] == out_n.splitlines()[-1]


def test_lhs_command(monkeypatch):
    code, out, _ = run(["lhs", "--n", "2", "--k", "1", "--order", "5"], monkeypatch)
    assert code == 0 and "coeffs: 1 6 12 28 57 108\n" in out


def test_deform_command(monkeypatch, tmp_path):
    path = tmp_path / "d.json"
    code, out, _ = run(["deform", "--family", "sp", "--n", "1", "--epsilon", "1", "--json", str(path)], monkeypatch)
    rec = json.loads(path.read_text())
    assert code == 0
    assert rec["coeffs"] == ["3", "0"] and rec["closure"] == "ok"
    code, out, _ = run(["deform", "--family", "osp", "--n", "1", "--m", "2", "--epsilon", "0"], monkeypatch)
    assert code == 0 and "coeffs: 4 4" in out and "strictly_upper: ok" in out
    code, out, _ = run(["deform", "--family", "so", "--m", "4", "--epsilon=-2/3"], monkeypatch)
    assert code == 0 and "coeffs: 6 0" in out and "epsilon=-2/3" in out


def test_wdim_command(monkeypatch):
    code, out, _ = run(["wdim", "--n", "1", "--weight", "2"], monkeypatch)
    assert code == 0 and "coeffs: 5 1" in out
    code, out, _ = run(["wdim", "--n", "2"], monkeypatch)
    assert "coeffs: 1 1" in out


def test_json_schema_and_csv(monkeypatch, tmp_path):
    j, c = tmp_path / "o.json", tmp_path / "o.csv"
    code, _, _ = run(["rhs", "--n", "2", "--k", "2", "--order", "12", "--json", str(j), "--csv", str(c)], monkeypatch)
    assert code == 0
    rec = json.loads(j.read_text())
    assert set(rec) == {"command", "params", "coeffs", "status", "first_mismatch", "ms"}
    assert rec["command"] == "rhs" and rec["params"] == {"n": 2, "k": 2, "order": 12}
    assert all(isinstance(v, str) and v.isdigit() for v in rec["coeffs"])
    assert isinstance(rec["ms"], int)
    rows = list(csv.reader(io.StringIO(c.read_text())))
    assert rows[0] == ["degree", "coefficient"]
    assert [r[1] for r in rows[1:]] == rec["coeffs"]
    assert [int(r[0]) for r in rows[1:]] == list(range(13))


def test_big_coefficients_are_exact(monkeypatch, tmp_path):
    j = tmp_path / "o.json"
    run(["rhs", "--n", "3", "--k", "1", "--order", "40", "--json", str(j)], monkeypatch)
    rec = json.loads(j.read_text())
    assert rec["coeffs"][40] == "79840590224"


def test_stdout_is_byte_stable_across_threads(monkeypatch):
    _, a, _ = run(["rhs", "--n", "2", "--k", "2", "--order", "18"], monkeypatch)
    _, b, _ = run(["rhs", "--n", "2", "--k", "2", "--order", "18", "--threads", "3"], monkeypatch)
    _, c, _ = run(["rhs", "--n", "2", "--k", "2", "--order", "18"], monkeypatch)
    assert a == b == c


def test_cache_roundtrip(monkeypatch, tmp_path):
    cache = tmp_path / "cache"
    args = ["verify", "--n", "1", "--k", "2", "--order", "15"]
    j1, j2 = tmp_path / "a.json", tmp_path / "b.json"
    _, out1, _ = run(args + ["--json", str(j1)], monkeypatch, cache)
    assert len(list(cache.glob("*.json"))) == 1
    _, out2, _ = run(args + ["--json", str(j2)], monkeypatch, cache)
    assert out1 == out2
    assert j1.read_bytes() == j2.read_bytes()
    # a cached record is served even if the computation would now differ
    import qvoa.lhs
    monkeypatch.setattr(qvoa.lhs, "lhs_series", lambda *a: (_ for _ in ()).throw(RuntimeError("not cached")))
    _, out3, _ = run(args, monkeypatch, cache)
    assert out3 == out1
    with pytest.raises(RuntimeError):
        run(args + ["--no-cache"], monkeypatch, cache)


def test_cache_keys_differ_by_params(monkeypatch, tmp_path):
    cache = tmp_path / "c"
    run(["rhs", "--n", "1", "--k", "1", "--order", "5"], monkeypatch, cache)
    run(["rhs", "--n", "1", "--k", "1", "--order", "6"], monkeypatch, cache)
    run(["qp", "--colors", "1", "--k", "1", "--order", "6"], monkeypatch, cache)
    assert len(list(cache.glob("*.json"))) == 3


def test_no_cache_without_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    run(["rhs", "--n", "1", "--k", "1", "--order", "5"], monkeypatch)
    assert list(tmp_path.iterdir()) == []


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "qvoa.cli", "rhs", "--n", "1", "--k", "1", "--order", "6"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.endswith("coeffs: 1 1 1 1 2 2 3\n")
