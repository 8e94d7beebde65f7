import json
from fractions import Fraction
from pathlib import Path

import pytest

from circan.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestAnalyze:
    def test_seven_vertex_complement_json(self, capsys):
        code, out = run(capsys, "analyze", "--n", "7", "--jumps", "1,2",
                        "--complement", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["indices"]["wiener"] == "42"
        assert doc["spectrum"]["rho"] == 12
        assert doc["forwarding"]["xi"] == 6
        assert doc["indices_exact"]["rt_az"] == "12400927/110592"

    def test_edgeless_complement_exits_2(self, capsys):
        code, _ = run(capsys, "analyze", "--n", "4", "--jumps", "1,2", "--complement")
        assert code == 2

    def test_disconnected_exits_2(self, capsys):
        code, _ = run(capsys, "analyze", "--n", "8", "--jumps", "2,4")
        assert code == 2

    def test_fixture_with_routing(self, capsys):
        code, out = run(capsys, "analyze",
                        "--fixture", str(FIXTURES / "fig1.graph"),
                        "--routing", str(FIXTURES / "fig1_r1.routes"),
                        "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["routing"]["vertex_loads"] == [2, 4, 4, 0, 2, 2]
        assert doc["routing"]["forwarding_index_wrt_routing"] == 4
        assert doc["routing"]["minimal"] is True

    def test_bad_fixture_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.graph"
        bad.write_text("3\n0 9\n")
        code, _ = run(capsys, "analyze", "--fixture", str(bad))
        assert code == 3

    def test_bad_jumps_exit_3(self, capsys):
        code, _ = run(capsys, "analyze", "--n", "8", "--jumps", "1,x")
        assert code == 3

    def test_multiplicative_source(self, capsys):
        code, out = run(capsys, "analyze", "--m", "2", "--h", "3",
                        "--complement", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["spectrum"]["rho"] == 16
        assert doc["indices"]["wiener"] == "64"

    def test_json_round_trip_and_determinism(self, capsys):
        _, first = run(capsys, "analyze", "--n", "16", "--jumps", "1,3",
                       "--complement", "--format", "json")
        _, second = run(capsys, "analyze", "--n", "16", "--jumps", "1,3",
                        "--complement", "--format", "json")
        assert first == second
        doc = json.loads(first)
        # rationals round-trip exactly through the p/q encoding
        assert Fraction(doc["metrics"]["reciprocal_transmission"]) == (
            Fraction(doc["indices"]["harary"]) * 2 / 16
        )
        # floats round-trip bit-exactly through the JSON encoding
        assert doc["indices"]["t_sc"] == json.loads(json.dumps(doc))["indices"]["t_sc"]

    def test_out_file(self, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code, out = run(capsys, "analyze", "--n", "4", "--jumps", "1,2",
                        "--format", "json", "--out", str(out_path))
        assert code == 0 and out == ""
        assert json.loads(out_path.read_text())["metrics"]["transmission"] == 3


class TestSpectrum:
    def test_complete_graph(self, capsys):
        code, out = run(capsys, "spectrum", "--n", "4", "--jumps", "1,2",
                        "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["eigenvalues"] == pytest.approx([3.0, -1.0, -1.0, -1.0], abs=1e-12)

    def test_half_jump_complement(self, capsys):
        code, out = run(capsys, "spectrum", "--n", "8", "--jumps", "1,4",
                        "--complement", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["radius_exact"] == 10
        assert abs(doc["radius_float"] - 10) < 1e-9
        assert doc["radius_abs_error"] < 1e-9

    def test_multiplicative_eight(self, capsys):
        code, out = run(capsys, "spectrum", "--n", "8", "--jumps", "1,2,4",
                        "--complement", "--format", "json")
        assert json.loads(out)["radius_exact"] == 16 and code == 0

    def test_disconnected(self, capsys):
        code, _ = run(capsys, "spectrum", "--n", "8", "--jumps", "2,4")
        assert code == 2


class TestRoutingCommand:
    def test_load_analysis(self, capsys):
        code, out = run(capsys, "routing",
                        "--fixture", str(FIXTURES / "fig1.graph"),
                        "--routing", str(FIXTURES / "fig1_r2.routes"),
                        "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["routing"]["vertex_loads"] == [5, 4, 9, 3, 1, 4]
        assert doc["routing"]["minimal"] is False

    def test_bad_routing_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.routes"
        bad.write_text("1 2\n")
        code, _ = run(capsys, "routing",
                      "--fixture", str(FIXTURES / "fig1.graph"),
                      "--routing", str(bad))
        assert code == 3


class TestVerify:
    def test_gen_sweep_known_exception(self, capsys):
        code, out = run(capsys, "verify", "--family", "double-loop-gen",
                        "--n", "8:20", "--format", "json")
        assert code == 0
        docs = json.loads(out)
        exceptional = [d for d in docs if d["status"] == "known_exception"]
        assert [(d["n"], d["a"]) for d in exceptional] == [(8, 3)]

    def test_half_adversarial_range_flagged_not_failed(self, capsys):
        code, out = run(capsys, "verify", "--family", "double-loop-half",
                        "--k", "2:3", "--format", "json")
        assert code == 0
        docs = json.loads(out)
        assert all(d["status"] == "out_of_domain" for d in docs)

    def test_mc_sweep(self, capsys):
        code, out = run(capsys, "verify", "--family", "mc", "--max-order", "128",
                        "--format", "text")
        assert code == 0
        assert "0 failed" in out

    def test_csv_output(self, capsys):
        code, out = run(capsys, "verify", "--family", "c7", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("family,n,a,m,h,status,note,passed")
        assert len(lines) == 3

    def test_mismatch_exits_4(self, capsys, monkeypatch):
        import circan.verifier as verifier_module

        real_predict = verifier_module.predict

        def corrupted(point):
            pred = real_predict(point)
            object.__setattr__(pred, "rho", pred.rho + 1)
            return pred

        monkeypatch.setattr(verifier_module, "predict", corrupted)
        code, out = run(capsys, "verify", "--family", "c7", "--format", "text")
        assert code == 4
        assert "FAILED" in out

    def test_bad_tol_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--family", "c7", "--tol", "0.5"])

    def test_jobs_env_default(self, monkeypatch):
        from circan.cli import _default_jobs

        monkeypatch.setenv("CIRCAN_JOBS", "3")
        assert _default_jobs() == 3
        monkeypatch.setenv("CIRCAN_JOBS", "zzz")
        assert _default_jobs() == 1
