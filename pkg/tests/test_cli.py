import contextlib
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from mdpart import partitions
from mdpart.cache import TableCache
from mdpart.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def test_count_examples():
    assert run(["count", "--r", "3", "--n", "4", "--threads", "1"])[:2] == (0, "13\n")
    assert run(["count", "--r", "4", "--n", "1", "--punctual"])[:2] == (0, "3\n")
    code, out, err = run(["count", "--r", "1", "--n", "4"])
    assert code == 2 and out == "" and "r >= 2" in err


def test_count_formats():
    code, out, _ = run(["count", "--r", "3", "--n", "3", "--format", "csv"])
    assert out.splitlines() == ["r,n,P,P_punctual", "3,0,1,1", "3,1,1,2", "3,2,3,5", "3,3,6,11"]
    code, out, _ = run(["count", "--r", "3", "--n", "3", "--table", "--format", "json"])
    assert json.loads(out) == {"r": 3, "n": 3, "punctual": False, "count": "6",
                               "table": ["1", "1", "3", "6"]}


def test_emit_ideals():
    code, out, _ = run(["count", "--r", "2", "--n", "3", "--emit-ideals", "--format", "json"])
    doc = json.loads(out)
    assert doc["count"] == "3" and len(doc["ideals"]) == 3
    gens = sorted(map(json.dumps, (i["generators"] for i in doc["ideals"])))
    # (x^3, y), (x^2, xy, y^2), (x, y^3)
    assert gens == sorted(map(json.dumps, [[[0, 1], [3, 0]], [[0, 2], [1, 1], [2, 0]], [[0, 3], [1, 0]]]))


def test_series_examples():
    assert run(["series", "partition", "--r", "2", "--order", "6"])[1] == "1,1,2,3,5,7,11\n"
    out = run(["series", "moduli", "--r", "3", "--genus", "1", "--chi-x", "0",
               "--chi-s", "7", "--order", "3"])[1]
    assert out == "7,0,0,0\n"
    out = run(["series", "reduced", "--r", "2", "--genus", "5", "--chi-s", "3", "--order", "4"])[1]
    assert out == "3,0,0,0,0\n"
    out = run(["series", "h", "--r", "3", "--order", "5"])[1]
    assert out == "0,1,2,3,4,5\n"
    out = run(["series", "punctual", "--r", "3", "--order", "5", "--format", "json"])[1]
    assert json.loads(out)["coefficients"] == ["1/1", "2/1", "5/1", "11/1", "24/1", "48/1"]


def test_series_default_order_is_12():
    out = run(["series", "partition", "--r", "2"])[1]
    assert len(out.strip().split(",")) == 13


def test_series_bad_fibration():
    code, _, err = run(["series", "moduli", "--r", "3", "--genus", "2", "--ky-zero"])
    assert code == 2 and "g = 1" in err


def test_check_examples():
    code, out, _ = run(["check", "pwp", "--r", "3", "--order", "20"])
    assert code == 0 and json.loads(out)["verdict"] == "holds-through-order"
    code, out, _ = run(["check", "euler", "--r", "3", "--genus", "0", "--chi-s", "1", "--order", "12"])
    rep = json.loads(out)
    assert code == 1
    assert rep["rational_function"] == {"numerator": ["1/1"], "denominator": ["1/1", "-2/1", "1/1"]}
    assert rep["symmetry"] == {"symmetric": False, "defect_power": 2}
    assert run(["check", "pwp", "--r", "2", "--order", "30"])[0] == 0


def test_check_pwp_r4_is_data():
    code, out, _ = run(["check", "pwp", "--r", "4", "--order", "8"])
    rep = json.loads(out)
    assert rep["pairs"][:3] == [["1", "1"], ["3", "3"], ["9", "9"]]
    assert code == (0 if rep["verdict"] == "holds-through-order" else 1)


def test_boxed():
    code, out, _ = run(["boxed", "pi", "--k", "2", "--l", "2", "--n", "1", "--format", "csv"])
    assert out.splitlines() == ["k,l,n,m,count", "2,2,1,0,1", "2,2,1,1,1", "2,2,1,2,2",
                                "2,2,1,3,1", "2,2,1,4,1"]
    assert run(["boxed", "tilde-pi", "--k", "2", "--l", "2", "--n", "1", "--brute"])[1] == "1,2,1,1\n"
    code, out, _ = run(["boxed", "verify", "--k", "3", "--l", "2", "--n", "2"])
    assert code == 0 and out.count("true") == 3
    assert run(["boxed", "pi", "--k", "0", "--l", "2", "--n", "1"])[0] == 2


def test_oracle_diff():
    assert run(["oracle-diff", "--r", "3", "--n-max", "10"])[:2] == (0, "no differences for r=3, n<=10\n")
    assert run(["oracle-diff", "--r", "2", "--n-max", "15"])[0] == 0
    assert run(["oracle-diff", "--r", "4", "--n-max", "0"])[0] == 0
    assert run(["oracle-diff", "--r", "1", "--n-max", "3"])[0] == 2


def test_oracle_diff_reports_disagreement(monkeypatch):
    real = partitions.count_table

    def broken(r, n_max, punctual=False, workers=1):
        t = real(r, n_max, punctual, workers)
        if n_max >= 3:
            t[3] += 1
        return t

    monkeypatch.setattr(partitions, "count_table", broken)
    code, out, _ = run(["oracle-diff", "--r", "3", "--n-max", "4", "--format", "csv"])
    assert code == 1
    assert out.splitlines() == ["r,n,punctual,dp,oracle", "3,3,false,7,6", "3,3,true,12,11"]


# -- cache -------------------------------------------------------------------

def test_cache_cold_and_warm_agree(tmp_path):
    argv = ["series", "punctual", "--r", "4", "--order", "7", "--cache-dir", str(tmp_path)]
    cold = run(argv)
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["dp-r4-punctual.json"]
    warm = run(argv)
    assert cold == warm == run(argv[:-2])


def test_cache_extends_prefix(tmp_path):
    cache = TableCache(tmp_path)
    calls = []

    def compute(n):
        calls.append(n)
        return partitions.count_table(3, n)

    v = partitions.ALGORITHM_VERSION
    assert cache.table("dp", 3, 5, False, v, compute) == [1, 1, 3, 6, 13, 24]
    assert cache.table("dp", 3, 3, False, v, compute) == [1, 1, 3, 6]
    assert calls == [5]
    cache.table("dp", 3, 8, False, v, compute)
    assert calls == [5, 8]
    assert cache.load("dp", 3, False, v) == partitions.count_table(3, 8)
    # a different algorithm stamp ignores the stored table
    assert cache.load("dp", 3, False, "other") == []


def test_cache_env_var(tmp_path):
    env = {"MDPART_CACHE_DIR": str(tmp_path), "PATH": "/usr/bin:/bin"}
    res = subprocess.run([sys.executable, "-m", "mdpart", "count", "--r", "3", "--n", "5"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0 and res.stdout == "24\n"
    assert (tmp_path / "dp-r3-plain.json").exists()


def test_cache_ignores_garbage(tmp_path):
    (tmp_path / "dp-r3-plain.json").write_text("{not json")
    assert run(["count", "--r", "3", "--n", "4", "--cache-dir", str(tmp_path)])[1] == "13\n"


# -- exit-code contract -------------------------------------------------------

@settings(max_examples=40)
@given(st.integers(-2, 5), st.integers(-3, 6), st.booleans(),
       st.sampled_from(["text", "json", "csv"]))
def test_count_exit_codes(r, n, punctual, fmt):
    argv = ["count", "--r", str(r), "--n", str(n), "--format", fmt, "--threads", "1"]
    if punctual:
        argv.append("--punctual")
    code, out, err = run(argv)
    if r >= 2 and n >= 0:
        assert code == 0 and out and not err
    else:
        assert code == 2 and not out and err


@settings(max_examples=25)
@given(st.sampled_from(["partition", "punctual", "hilbert", "moduli", "reduced", "h", "c"]),
       st.integers(0, 4), st.integers(-1, 7), st.integers(0, 3))
def test_series_exit_codes(kind, r, order, genus):
    code, out, err = run(["series", kind, "--r", str(r), "--order", str(order),
                          "--genus", str(genus), "--threads", "1"])
    if r >= 2 and order >= 0:
        assert code == 0
    else:
        assert code == 2 and err


@pytest.mark.parametrize("argv", [
    [], ["count"], ["count", "--r", "x", "--n", "2"], ["series", "bogus", "--r", "2"],
    ["check", "pwp"], ["boxed", "pi", "--k", "1"], ["count", "--r", "3", "--n", "2", "--format", "xml"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2
