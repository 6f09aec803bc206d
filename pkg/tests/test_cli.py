import io
import json
from contextlib import redirect_stderr, redirect_stdout

import constel.hankel as hankel_mod
from constel.algebra import MultiPoly, XSeries
from constel.cli import run
from constel.paths import f_poly


def capture(argv, env=None, monkeypatch=None):
    """Run the CLI in process and collect (exit code, stdout, stderr)."""
    if env:
        for key, value in env.items():
            monkeypatch.setenv(key, value)
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        rc = run(argv)
    return rc, out.getvalue(), err.getvalue()


class TestBasicCommands:
    def test_fn_text(self):
        rc, out, err = capture(["fn", "--p", "3", "--n", "2"])
        assert rc == 0 and err == ""
        assert out == "V1^2*V2^2 + V1*V2^2*V3 + V1*V2*V3*V4\n"

    def test_fn_json_roundtrip(self):
        rc, out, _ = capture(["fn", "--p", "3", "--n", "1", "--json"])
        assert rc == 0
        payload = json.loads(out)
        assert payload["p"] == 3 and payload["n"] == 1 and payload["r"] == 0
        assert MultiPoly.from_json(payload["result"]) == f_poly(3, 1, 0)

    def test_contfrac_lines(self):
        rc, out, _ = capture(["contfrac", "--p", "2", "--order", "2"])
        assert rc == 0
        assert out.splitlines() == ["t^0: 1", "t^1: V1", "t^2: V1^2 + V1*V2"]

    def test_hankel_and_invert(self):
        rc, out, _ = capture(["hankel", "--p", "3", "--m", "2", "--n", "0"])
        assert rc == 0 and out.strip() == "V1*V2"
        rc, out, _ = capture(["invert", "--p", "3", "--i", "4"])
        assert rc == 0 and out.strip() == "V4"

    def test_euler_series_variants(self):
        for what, extra in (("v", []), ("y", []), ("xv", []),
                            ("vi", ["--i", "2"]),
                            ("vi-closed", ["--i", "2"]),
                            ("f", ["--n", "1"]), ("f1", ["--n", "1"]),
                            ("t", ["--n", "5"])):
            rc, out, _ = capture(["euler-series", "--what", what,
                                  "--order", "4", *extra])
            assert rc == 0 and out.strip(), what

    def test_euler_series_json(self):
        rc, out, _ = capture(["euler-series", "--what", "t", "--n", "4",
                              "--order", "3", "--json"])
        assert rc == 0
        payload = json.loads(out)
        got = XSeries.from_json(payload["result"])
        # fourth ladder entry is 1 - 2xV = 1 - 2x - 4x^2 - 16x^3
        assert got.univar_coeffs(1) == [1, -2, -4, -16]

    def test_euler_verify(self):
        rc, out, _ = capture(["euler-verify", "--kmax", "1", "--order", "6"])
        assert rc == 0
        lines = out.splitlines()
        assert len(lines) == 2 and all(line.startswith("ok") for line in lines)


class TestLGVCommand:
    def test_agreement(self):
        rc, out, err = capture(["lgv", "--p", "3", "--m", "1", "--n", "1"])
        assert rc == 0 and err == ""
        assert "disjoint count:  1" in out

    def test_json(self):
        rc, out, _ = capture(["lgv", "--p", "2", "--m", "1", "--n", "1",
                              "--json"])
        assert rc == 0
        payload = json.loads(out)
        assert payload["disjoint_count"] == 1
        assert payload["signed_sum"] == payload["determinant"]

    def test_corrupted_tables_exit_one(self, monkeypatch):
        monkeypatch.setattr(hankel_mod, "f_poly",
                            lambda p, n, r: MultiPoly.one())
        rc, out, err = capture(["lgv", "--p", "3", "--m", "1", "--n", "1"])
        assert rc == 1
        assert "identity violation" in err


class TestVerifyAll:
    ARGS = ["verify-all", "--p", "2", "--n-max", "1", "--order", "3"]

    def test_all_green(self):
        rc, out, err = capture(self.ARGS)
        assert rc == 0 and err == ""
        lines = out.splitlines()
        assert lines[-1].endswith("0 failures")
        assert all(line.startswith("ok  ") for line in lines[:-1])

    def test_deterministic_output(self):
        first = capture(self.ARGS)
        second = capture(self.ARGS)
        assert first == second

    def test_thread_hint_does_not_change_output(self, monkeypatch):
        rc0, out0, _ = capture(self.ARGS)
        rc1, out1, err1 = capture(self.ARGS, env={"CONSTEL_THREADS": "3"},
                                  monkeypatch=monkeypatch)
        assert (rc0, out0) == (rc1, out1) and err1 == ""

    def test_garbage_thread_hint_warns_and_runs(self, monkeypatch):
        rc, out, err = capture(self.ARGS, env={"CONSTEL_THREADS": "lots"},
                               monkeypatch=monkeypatch)
        assert rc == 0
        assert "CONSTEL_THREADS" in err

    def test_no_p_values_still_runs_shared_suites(self):
        rc, out, _ = capture(["verify-all", "--p", "--n-max", "1",
                              "--order", "3"])
        assert rc == 0
        assert out.splitlines()[-1].endswith("0 failures")


class TestUsageErrors:
    def test_missing_command(self):
        rc, _, _ = capture([])
        assert rc == 2

    def test_unknown_command(self):
        rc, _, _ = capture(["frobnicate"])
        assert rc == 2

    def test_bad_values(self):
        assert capture(["fn", "--p", "1", "--n", "0"])[0] == 2
        assert capture(["fn", "--p", "3", "--n", "-1"])[0] == 2
        assert capture(["fn", "--p", "3", "--n", "0", "--r", "3"])[0] == 2
        assert capture(["hankel", "--p", "3", "--m", "0", "--n", "-2"])[0] == 2
        assert capture(["invert", "--p", "3", "--i", "0"])[0] == 2
        assert capture(["lgv", "--p", "3", "--m", "0", "--n", "4"])[0] == 2
        assert capture(["euler-series", "--what", "vi", "--order", "4"])[0] == 2
        assert capture(["euler-series", "--what", "t", "--n", "0",
                        "--order", "4"])[0] == 2
        assert capture(["verify-all", "--p", "2", "1"])[0] == 2
