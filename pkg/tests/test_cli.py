"""CLI surface: subcommands, formats, exit codes, units, determinism."""

from __future__ import annotations

import json
import math
from pathlib import Path

import pytest

import mixent.combinatorics
from mixent.cli import KB_SI, main
from mixent.combinatorics import Count

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"
LN2 = math.log(2)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(out):
    lines = out.strip().split("\n")
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


class TestCount:
    def test_binomial(self, capsys):
        code, out, _ = run(capsys, "count", "binomial", "12", "5")
        assert code == 0
        assert "value = 792" in out
        assert "log_value = 6.67456" in out

    def test_bose(self, capsys):
        code, out, _ = run(capsys, "count", "bose", "3", "2")
        assert code == 0
        assert "value = 4" in out

    def test_symbols(self, capsys):
        code, out, _ = run(capsys, "count", "symbols", "3", "2")
        assert code == 0
        assert "value = 8" in out

    def test_multiplicity(self, capsys):
        code, out, _ = run(
            capsys, "count", "multiplicity", "--occ", "2,1", "--deg", "2,1"
        )
        assert code == 0
        assert "value = 12" in out

    def test_bose_approx_is_log_only(self, capsys):
        code, out, _ = run(capsys, "count", "bose-approx", "10", "1000")
        assert code == 0
        assert "value = (log-only)" in out
        expected = 10 * math.log(1000) - math.log(math.factorial(10))
        assert f"log_value = {format(expected, '.12g')}" in out

    def test_log_only_above_exact_limit(self, capsys):
        code, out, _ = run(capsys, "count", "binomial", "6000", "3000")
        assert code == 0
        assert "value = (log-only)" in out

    def test_domain_error_exit_1(self, capsys):
        code, out, err = run(capsys, "count", "binomial", "3", "5")
        assert code == 1
        assert "error" in err

    def test_usage_error_exit_2(self, capsys):
        code, _, err = run(capsys, "count", "binomial", "3")
        assert code == 2
        assert "usage" in err.lower()

    def test_unknown_kind_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "frobnicate", "1", "2"])
        assert exc.value.code == 2

    def test_occ_on_wrong_kind_exit_2(self, capsys):
        code, _, err = run(capsys, "count", "binomial", "3", "2", "--occ", "1")
        assert code == 2


class TestEntropy:
    def test_ideal_gas(self, capsys):
        code, out, _ = run(
            capsys,
            "entropy", "--N", "700", "--V", "3.0", "--T", "2.0",
            "--model", "gibbs-corrected",
        )
        assert code == 0
        expected = 700 * math.log(3.0 / 700) + 1.5 * 700 * math.log(2.0) + 700
        assert f"S = {format(expected, '.12g')}" in out
        assert "units = kB" in out
        assert "model = gibbs-corrected" in out

    def test_levels_mode(self, capsys):
        code, out, _ = run(
            capsys,
            "entropy", "--N", "1000", "--T", "1.0",
            "--levels", "0:1,1:1", "--model", "distinguishable",
        )
        assert code == 0
        assert "S = 582.203108888" in out
        assert "per_particle = 0.582203108888" in out

    def test_levels_and_volume_conflict(self, capsys):
        code, _, err = run(
            capsys,
            "entropy", "--N", "10", "--T", "1.0", "--V", "1.0",
            "--levels", "0:1",
        )
        assert code == 2

    def test_missing_volume(self, capsys):
        code, _, err = run(capsys, "entropy", "--N", "10", "--T", "1.0")
        assert code == 2

    def test_bad_model_choice(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["entropy", "--N", "10", "--V", "1.0", "--T", "1.0",
                  "--model", "anyons"])
        assert exc.value.code == 2

    def test_domain_error_exit_1(self, capsys):
        code, _, err = run(
            capsys, "entropy", "--N", "10", "--V", "-1.0", "--T", "1.0"
        )
        assert code == 1

    def test_si_units(self, capsys, monkeypatch):
        monkeypatch.setenv("MIXENT_KB", "si")
        code, out, _ = run(
            capsys,
            "entropy", "--N", "700", "--V", "3.0", "--T", "2.0",
            "--model", "gibbs-corrected",
        )
        assert code == 0
        expected = (
            700 * math.log(3.0 / 700) + 1.5 * 700 * math.log(2.0) + 700
        ) * KB_SI
        assert f"S = {format(expected, '.12g')}" in out
        assert "units = J/K" in out

    def test_bad_units_env_exit_1(self, capsys, monkeypatch):
        monkeypatch.setenv("MIXENT_KB", "imperial")
        code, _, err = run(
            capsys, "entropy", "--N", "10", "--V", "1.0", "--T", "1.0"
        )
        assert code == 1


class TestMix:
    def test_csv_output(self, capsys):
        code, out, _ = run(
            capsys, "mix", "--scenario", str(SCENARIO_DIR / "distinct_half.scenario")
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        row = rows[0]
        assert row["scenario"] == "distinct-half"
        assert row["model"] == "gibbs-corrected"
        assert row["units"] == "kB"
        assert float(row["delta_S"]) == pytest.approx(1000 * LN2, abs=1e-6)
        assert float(row["separation_work"]) == pytest.approx(
            1000 * LN2, abs=1e-6
        )

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys,
            "mix", "--scenario", str(SCENARIO_DIR / "distinct_full.scenario"),
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert len(data) == 1
        assert data[0]["scenario"] == "distinct-full"
        assert data[0]["delta_S"] == pytest.approx(2000 * LN2, abs=1e-6)

    def test_same_species_is_zero(self, capsys):
        code, out, _ = run(
            capsys, "mix", "--scenario", str(SCENARIO_DIR / "same_species.scenario")
        )
        assert code == 0
        assert float(parse_csv(out)[0]["delta_S"]) == 0.0

    def test_deterministic_output(self, capsys):
        path = str(SCENARIO_DIR / "partial_overlap.scenario")
        _, out1, _ = run(capsys, "mix", "--scenario", path)
        _, out2, _ = run(capsys, "mix", "--scenario", path)
        assert out1 == out2

    def test_parse_error_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.scenario"
        bad.write_text("what even is this\n", encoding="utf-8")
        code, _, err = run(capsys, "mix", "--scenario", str(bad))
        assert code == 2
        assert "bad.scenario:1" in err

    def test_domain_error_exit_1(self, capsys, tmp_path):
        bad = tmp_path / "hot.scenario"
        bad.write_text(
            "compartment = a 10 1.0 1.0\ncompartment = b 10 1.0 2.0\n",
            encoding="utf-8",
        )
        code, _, err = run(capsys, "mix", "--scenario", str(bad))
        assert code == 1
        assert "isothermal" in err

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "mix", "--scenario", str(tmp_path / "nope.scenario")
        )
        assert code == 2

    def test_si_units_scale_work(self, capsys, monkeypatch):
        monkeypatch.setenv("MIXENT_KB", "si")
        code, out, _ = run(
            capsys, "mix", "--scenario", str(SCENARIO_DIR / "distinct_half.scenario")
        )
        assert code == 0
        row = parse_csv(out)[0]
        assert row["units"] == "J/K"
        assert float(row["delta_S"]) == pytest.approx(
            1000 * LN2 * KB_SI, rel=1e-9
        )


class TestSweepOverlap:
    def test_three_point_sweep(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep-overlap",
            "--scenario", str(SCENARIO_DIR / "distinct_half.scenario"),
            "--points", "3",
        )
        assert code == 0
        rows = parse_csv(out)
        assert [float(r["overlap"]) for r in rows] == [0.0, 0.5, 1.0]
        deltas = [float(r["delta_S"]) for r in rows]
        assert deltas[0] == pytest.approx(1000 * LN2, abs=1e-6)
        assert deltas[1] == pytest.approx(0.75 * 1000 * LN2, abs=1e-6)
        assert deltas[2] == pytest.approx(0.0, abs=1e-9)

    def test_monotone_101_points(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep-overlap",
            "--scenario", str(SCENARIO_DIR / "distinct_half.scenario"),
            "--points", "101",
        )
        assert code == 0
        deltas = [float(r["delta_S"]) for r in parse_csv(out)]
        assert len(deltas) == 101
        assert all(b <= a + 1e-12 for a, b in zip(deltas, deltas[1:]))

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys,
            "sweep-overlap",
            "--scenario", str(SCENARIO_DIR / "distinct_half.scenario"),
            "--points", "2", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert len(data) == 2
        assert data[0]["overlap"] == 0.0
        assert data[1]["overlap"] == 1.0

    def test_too_few_points_exit_2(self, capsys):
        code, _, err = run(
            capsys,
            "sweep-overlap",
            "--scenario", str(SCENARIO_DIR / "distinct_half.scenario"),
            "--points", "1",
        )
        assert code == 2

    def test_deterministic_output(self, capsys):
        args = (
            "sweep-overlap",
            "--scenario", str(SCENARIO_DIR / "partial_overlap.scenario"),
            "--points", "11",
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestOracleCheck:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--max-n", "3")
        assert code == 0
        assert "all identities verified: 20 cases" in out
        assert "FAIL" not in out

    def test_mutation_caught(self, capsys, monkeypatch):
        original = mixent.combinatorics.multiplicity_distinguishable

        def corrupted(occ, degs, **kwargs):
            true_count = original(occ, degs, **kwargs)
            return Count.from_int(true_count.value + 1)

        monkeypatch.setattr(
            mixent.combinatorics, "multiplicity_distinguishable", corrupted
        )
        code, out, _ = run(capsys, "oracle-check", "--max-n", "2")
        assert code == 1
        assert "FAIL" in out
        assert "enumerated" in out

    def test_negative_max_n_exit_2(self, capsys):
        code, _, err = run(capsys, "oracle-check", "--max-n", "-1")
        assert code == 2


class TestTopLevel:
    def test_no_subcommand_exit_2(self, capsys):
        code = main([])
        captured = capsys.readouterr()
        assert code == 2
        assert "usage" in captured.err.lower()
