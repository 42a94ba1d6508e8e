"""Command-line interface: serialization contract, determinism, exit codes."""

import csv
import io
import json
import math

import pytest

from groupest.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_json(out: str) -> dict:
    return json.loads(out)


def parse_csv(out: str):
    reader = csv.reader(io.StringIO(out))
    rows = list(reader)
    return rows[0], [[float(x) for x in row] for row in rows[1:]]


class TestKappa:
    def test_ten_rows_decreasing(self, capsys):
        code, out, err = run_cli(capsys, [
            "kappa", "--group", "u1", "--energy-grid", "1:10:10",
        ])
        assert code == 0 and err == ""
        payload = parse_json(out)
        assert payload["schema_version"] == "1"
        assert payload["command"] == "kappa"
        kappas = [row[1] for row in payload["rows"]]
        assert len(kappas) == 10
        assert all(a > b for a, b in zip(kappas, kappas[1:]))

    def test_su2_large_E_band(self, capsys):
        code, out, _ = run_cli(capsys, [
            "kappa", "--group", "su2", "--energy", "30",
        ])
        assert code == 0
        row = parse_json(out)["rows"][0]
        rel_err_large = row[5]
        assert rel_err_large <= 5e-3

    def test_csv_json_round_trip(self, capsys):
        argv = ["kappa", "--group", "u1", "--energy-grid", "0.5:4:8"]
        code, out_json, _ = run_cli(capsys, argv)
        code2, out_csv, _ = run_cli(capsys, argv + ["--format", "csv"])
        assert code == code2 == 0
        jrows = parse_json(out_json)["rows"]
        header, crows = parse_csv(out_csv)
        assert header == parse_json(out_json)["columns"]
        for jr, cr in zip(jrows, crows):
            for a, b in zip(jr, cr):
                assert b == pytest.approx(a, rel=1e-15, abs=0.0)

    def test_infeasible_rows_error(self, capsys):
        code, out, err = run_cli(capsys, [
            "kappa", "--group", "so3", "--factor", "minus",
            "--energy-grid", "0.5,1,2",
        ])
        assert code == 1
        assert len(parse_json(out)["rows"]) == 2  # feasible rows still emitted
        error_payload = json.loads(err)
        assert error_payload["errors"][0]["where"] == "E=0.5"


class TestCut:
    def test_u1_large_cut_limit(self, capsys):
        code, out, _ = run_cli(capsys, [
            "cut", "--group", "u1", "--cut", "10000", "--format", "csv",
        ])
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0][2] == pytest.approx(math.pi ** 2 / 8.0, rel=1e-3)

    def test_zero_cut_anchors(self, capsys):
        code, out, _ = run_cli(capsys, [
            "cut", "--group", "so3", "--sector", "integer", "--cut", "0",
        ])
        assert code == 0
        assert parse_json(out)["rows"][0][1] == pytest.approx(1.5)

    def test_qubit_guard(self, capsys):
        code, out, err = run_cli(capsys, [
            "cut", "--group", "qubits", "--cut", "1,100",
        ])
        assert code == 1
        assert len(parse_json(out)["rows"]) == 1
        assert "n=1" in json.loads(err)["errors"][0]["where"]


class TestState:
    def test_norm_in_parameters(self, capsys):
        code, out, _ = run_cli(capsys, [
            "state", "--group", "su2", "--energy", "5",
        ])
        assert code == 0
        payload = parse_json(out)
        assert payload["parameters"]["norm"] == pytest.approx(1.0, abs=1e-9)
        assert payload["columns"] == ["label", "amplitude", "weight"]
        assert all(row[1] >= 0 for row in payload["rows"])

    def test_finite_cut_state(self, capsys):
        code, out, _ = run_cli(capsys, [
            "state", "--group", "u1", "--cut", "1",
        ])
        assert code == 0
        payload = parse_json(out)
        # sine-profile amplitudes on labels -1, 0, 1
        amps = [row[1] for row in payload["rows"]]
        assert amps[1] == pytest.approx(math.sqrt(2) * amps[0], rel=1e-9)

    def test_missing_state_errors(self, capsys):
        code, out, err = run_cli(capsys, [
            "state", "--group", "heisenberg", "--energy", "1",
        ])
        assert code == 1
        assert json.loads(err)["errors"]


class TestSimulate:
    def test_fixed_seed_byte_identical(self, capsys):
        argv = ["simulate", "--group", "u1", "--samples", "50",
                "--trials", "5", "--seed", "13"]
        _, out1, _ = run_cli(capsys, argv)
        _, out2, _ = run_cli(capsys, argv)
        assert out1 == out2

    def test_schur_ks(self, capsys):
        code, out, _ = run_cli(capsys, [
            "simulate", "--group", "schur", "--samples", "4000",
        ])
        assert code == 0
        row = parse_json(out)["rows"][0]
        assert row[1] <= 0.02

    def test_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GM_THREADS", "2")
        code, out, _ = run_cli(capsys, [
            "kappa", "--group", "u1", "--energy-grid", "1:6:6",
        ])
        assert code == 0
        payload = parse_json(out)
        assert payload["parameters"]["threads"] == 2
        kappas = [row[1] for row in payload["rows"]]
        assert all(a > b for a, b in zip(kappas, kappas[1:]))

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, [
            "cut", "--group", "su2", "--cut", "3,4", "--out", str(target),
        ])
        assert code == 0 and out == ""
        payload = json.loads(target.read_text())
        assert len(payload["rows"]) == 2
