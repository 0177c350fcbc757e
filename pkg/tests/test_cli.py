import csv
import io
from fractions import Fraction

import pytest

from vdcpair import cli
from vdcpair.sequence import vdc_prefix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "4", "--base", "2")
    assert code == 0
    assert out.splitlines() == ["0", "1/2", "1/4", "3/4"]
    code, out, _ = run(capsys, "gen", "--n", "1", "--base", "7")
    assert (code, out) == (0, "0\n")


@pytest.mark.parametrize("argv", [["gen", "--n", "0"], ["gen", "--n", "3", "--base", "1"],
                                  ["gen", "--n", "1.5"], ["gen"], ["eval", "--s", "nan", "--n", "3"],
                                  ["frobnicate"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_gen_roundtrip(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    assert run(capsys, "gen", "--n", "300", "--base", "3", "--out", str(path))[0] == 0
    assert cli.ingest_points(path).points == vdc_prefix(300, 3).points


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--n", "3", "--s", "1", "--engine", "naive")
    assert code == 0
    (r,) = rows(out)
    assert list(r) == cli.EVAL_HEADER
    assert r["f_exact"] == "4/3"
    assert r["f_decimal"] == "1.33333333333"
    assert r["poisson_decimal"] == "2"
    code, out, _ = run(capsys, "eval", "--n", "1024", "--s", "1", "--engine", "closed")
    assert rows(out)[0]["f_exact"] == "2"


def test_eval_closed_out_of_domain(capsys):
    code, out, err = run(capsys, "eval", "--n", "2", "--s", "1", "--engine", "closed")
    assert code == 3
    assert "s outside validated closed-form domain" in err
    assert out == ""


def test_eval_points_file(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("# comment\n0\n\n1/2\n0.25  # trailing\n")
    code, out, _ = run(capsys, "eval", "--points", str(p), "--s", "1", "--engine", "sorted")
    assert code == 0
    r = rows(out)[0]
    assert (r["n"], r["f_exact"]) == ("3", "4/3")
    code, _, _ = run(capsys, "eval", "--points", str(p), "--s", "1", "--engine", "closed")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--points", str(tmp_path / "missing"), "--s", "1", "--engine", "naive")
    assert code == 1


def test_ingest(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("0\n1/2\n0.25\n")
    assert cli.ingest_points(p).points == (0, Fraction(1, 2), Fraction(1, 4))
    p.write_text("3/2\n")
    assert cli.ingest_points(p).points == (Fraction(1, 2),)
    p.write_text("abc\n")
    with pytest.raises(cli.PointsFileError, match="line 1"):
        cli.ingest_points(p)
    p.write_text("0\n\n# x\n1/0\n")
    with pytest.raises(cli.PointsFileError, match="line 4"):
        cli.ingest_points(p)


def test_sweep_closed(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "8", "--s-from", "0", "--s-to", "1/2", "--steps", "8",
                       "--engine", "closed")
    assert code == 0
    assert out.splitlines()[0] == ",".join(cli.SWEEP_HEADER)
    rs = rows(out)
    assert len(rs) == 9
    assert {r["f_exact"] for r in rs} == {"0"}
    assert [r["s"] for r in rs][:3] == ["0", "1/16", "1/8"]


def test_sweep_naive_and_domain(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "8", "--s-from", "1", "--s-to", "2", "--steps", "1",
                       "--engine", "naive")
    assert code == 0
    assert rows(out)[0]["f_exact"] == "2"
    code, out, _ = run(capsys, "sweep", "--n", "3", "--s-from", "0", "--s-to", "3", "--steps", "3",
                       "--engine", "closed")
    rs = rows(out)
    assert code == 0
    assert [r["status"] for r in rs] == ["ok", "ok", "out_of_domain", "out_of_domain"]
    assert rs[2]["f_exact"] == ""
    code, _, _ = run(capsys, "sweep", "--n", "3", "--s-from", "2", "--s-to", "1", "--steps", "3")
    assert code == 2


def test_sweep_to_file_lf(tmp_path, capsys):
    p = tmp_path / "o.csv"
    run(capsys, "sweep", "--n", "5", "--s-from", "0", "--s-to", "2", "--steps", "4", "--out", str(p))
    data = p.read_bytes()
    assert b"\r" not in data and data.count(b"\n") == 6


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "64")
    assert code == 0
    checks = int(out.split()[0])
    assert checks >= 64 * 32
    assert run(capsys, "verify", "--n-max", "2")[0] == 0
    assert run(capsys, "verify", "--n-max", "1")[0] == 2


def test_verify_detects_injected_fault(capsys, monkeypatch):
    from vdcpair.closedform import f_closed_form

    def faulty(n, s):
        f = f_closed_form(n, s)
        return f + Fraction(1, n) if (n, s) == (13, Fraction(5, 2)) else f

    monkeypatch.setattr(cli, "f_closed_form", faulty)
    monkeypatch.setattr(cli.run_verification, "__defaults__", (4, faulty, 64))
    code, out, _ = run(capsys, "verify", "--n-max", "20")
    assert code == 4
    assert "N=13 s=5/2" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n", "10000", "--s", "1", "--engines", "naive,sorted,closed")
    assert code == 0
    rs = rows(out)
    assert [r["engine"] for r in rs] == ["naive", "sorted", "closed"]
    assert len({r["f_decimal"] for r in rs}) == 1
    code, out, _ = run(capsys, "bench", "--n", "2", "--s", "0", "--engines", "closed")
    assert rows(out)[0]["f_decimal"] == "0"


def test_bench_naive_guard(capsys):
    code, _, err = run(capsys, "bench", "--n", "100001", "--s", "1", "--engines", "naive")
    assert code == 2 and "--force" in err


def test_bench_closed_huge(capsys):
    code, out, _ = run(capsys, "bench", "--n", "1000000000", "--s", "13/10", "--engines", "closed")
    assert code == 0
    assert int(rows(out)[0]["elapsed_nanos"]) < 10**9


def test_decimal_rounding():
    assert cli.to_decimal(Fraction(2, 3)) == "0.666666666667"
    # exact tie at the 13th digit rounds to even
    assert cli.to_decimal(Fraction(1000000000005, 10**12)) == "1.00000000000"
    assert cli.to_decimal(Fraction(1000000000015, 10**12)) == "1.00000000002"
