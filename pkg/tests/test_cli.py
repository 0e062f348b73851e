"""Tests for the command-line interface and table reproduction."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from config.settings import Settings
from src.cli import RunConfig, cli
from src.errors import ConfigError
from src.reproduce import TableReproducer, run_checks
from src.reproduce.tables import CellResult, TableReport
from src.tra import PhysicalParams


@pytest.fixture(autouse=True)
def _isolated_settings(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("TRA_CACHE_DIR", str(tmp_path / "cache"))


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

class TestSpectrumCommand:

    def test_help(self):
        result = CliRunner().invoke(cli, ["spectrum", "--help"])
        assert result.exit_code == 0
        assert "bound-state energies" in result.output

    def test_determinant_single_level(self):
        result = CliRunner().invoke(
            cli, ["spectrum", "--method", "det", "--a", "0.5", "--ell", "5", "--n", "0", "--window", "6", "7"]
        )
        assert result.exit_code == 0, result.output
        rows = _rows(result.output)
        assert list(rows[0]) == ["k", "E", "dE"]
        assert rows[0]["k"] == "0"
        assert float(rows[0]["dE"]) == pytest.approx(0.005042540, abs=2e-9)

    @pytest.mark.slow
    def test_pps_to_file(self, tmp_path):
        out = tmp_path / "l5.csv"
        args = ["spectrum", "--method", "pps", "--a", "0.5", "--ell", "5", "--emax", "26", "--fit-points", "100", "-o", str(out)]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 0, result.output
        rows = _rows(out.read_text())
        assert len(rows) == 10
        assert float(rows[0]["dE"]) == pytest.approx(0.005038139, abs=2e-9)

    @pytest.mark.slow
    def test_matrix_high_l_by_a2(self):
        args = ["spectrum", "--method", "matrix", "--a2", "1.0", "--ell", "40", "--size", "100", "--levels", "3"]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 0, result.output
        assert float(_rows(result.output)[0]["E"]) == pytest.approx(41.50031254, abs=2e-7)

    def test_repeatable_output(self):
        args = ["spectrum", "--method", "det", "--a", "0.5", "--ell", "5", "--n", "2", "--format", "json"]
        first = CliRunner().invoke(cli, args)
        second = CliRunner().invoke(cli, args)
        assert first.exit_code == 0, first.output
        assert first.output == second.output
        payload = json.loads(first.output)
        assert payload["method"] == "det"
        assert [lv["k"] for lv in payload["levels"]] == [0, 1, 2]

    def test_a_and_a2_are_exclusive(self):
        result = CliRunner().invoke(cli, ["spectrum", "--a", "0.5", "--a2", "0.25", "--ell", "5"])
        assert result.exit_code == 2

    def test_missing_singularity(self):
        result = CliRunner().invoke(cli, ["spectrum", "--ell", "5"])
        assert result.exit_code == 2

    def test_det_without_n(self):
        result = CliRunner().invoke(cli, ["spectrum", "--method", "det", "--a", "0.5", "--ell", "5"])
        assert result.exit_code == 2
        assert "--n" in result.output

    def test_bad_physics_is_usage_error(self):
        result = CliRunner().invoke(cli, ["spectrum", "--omega", "-1", "--a", "0.5", "--ell", "5"])
        assert result.exit_code == 2
        assert "omega" in result.output

    @pytest.mark.parametrize("option, value", [("--levels", "0"), ("--size", "1"), ("--fit-points", "1")])
    def test_out_of_range_counts(self, option, value):
        result = CliRunner().invoke(cli, ["spectrum", "--a", "0.5", "--ell", "5", option, value])
        assert result.exit_code == 2
        assert option in result.output

    def test_n_without_det(self):
        result = CliRunner().invoke(cli, ["spectrum", "--method", "pps", "--a", "0.5", "--ell", "5", "--n", "3"])
        assert result.exit_code == 2

    def test_bracket_below_omega_is_computation_error(self):
        args = ["spectrum", "--method", "det", "--a", "0.5", "--ell", "5", "--n", "2", "--window", "0.5", "7"]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 1
        assert "omega" in result.output

    def test_unknown_method(self):
        result = CliRunner().invoke(cli, ["spectrum", "--method", "fem", "--a", "0.5", "--ell", "5"])
        assert result.exit_code == 2


class TestRunConfig:

    P = PhysicalParams(omega=1.0, a=0.5, ell=5)

    def test_window_needs_det(self):
        with pytest.raises(ConfigError):
            RunConfig(method="pps", params=self.P, settings=Settings(), window=(6.0, 7.0))

    def test_empty_window(self):
        with pytest.raises(ConfigError):
            RunConfig(method="det", params=self.P, settings=Settings(), N=1, window=(7.0, 6.0))

    def test_levels_positive(self):
        with pytest.raises(ConfigError):
            RunConfig(method="matrix", params=self.P, settings=Settings(), levels=0)


# ---------------------------------------------------------------------------
# wavefunction
# ---------------------------------------------------------------------------

class TestWavefunctionCommand:

    def test_csv_columns(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TRA_WAVE_POINTS", "200")
        out = tmp_path / "fig1.csv"
        args = ["wavefunction", "--method", "det", "--n", "10", "--a", "0.5", "--ell", "5", "-o", str(out)]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 0, result.output
        rows = _rows(out.read_text())
        assert list(rows[0]) == ["r", "psi0", "psi1", "psi2", "psi3", "psi4", "psi5"]
        assert len(rows) == 200
        assert float(rows[0]["r"]) == pytest.approx(0.05)

    def test_too_few_levels(self):
        args = ["wavefunction", "--method", "det", "--n", "2", "--a", "0.5", "--ell", "5"]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 1

    def test_det_without_n(self):
        result = CliRunner().invoke(cli, ["wavefunction", "--method", "det", "--a", "0.5", "--ell", "5"])
        assert result.exit_code == 2
        assert "--n" in result.output


# ---------------------------------------------------------------------------
# reproduce-tables / check
# ---------------------------------------------------------------------------

class TestTableReport:

    def test_missing_cell_fails(self):
        report = TableReport(table=2, cells=[
            CellResult(table=2, row="0", column="N=0", computed=0.0050425401, reference=0.005042540, tolerance=1e-8),
            CellResult(table=2, row="1", column="N=1", computed=None, reference=0.006590264, tolerance=1e-8),
        ])
        assert report.cells[0].passed
        assert not report.passed
        assert len(report.failures) == 1
        assert report.summary == "Table 2: 1/2 cells within tolerance"

    def _cell(self, computed, alternate_tolerance=2e-6):
        return CellResult(
            table=4, row="0", column="l=5 a2=0.25", computed=computed, reference=6.505038139,
            tolerance=5e-5, alternate=6.505038, alternate_tolerance=alternate_tolerance,
        )

    def test_alternate_gate_rejects(self):
        cell = self._cell(6.505041)
        assert cell.deviation <= cell.tolerance
        assert not cell.passed
        assert cell.to_dict()["alternate_deviation"] == pytest.approx(3e-6, abs=1e-12)

    def test_alternate_gate_accepts(self):
        assert self._cell(6.5050385).passed

    def test_alternate_ungated(self):
        assert self._cell(6.505041, alternate_tolerance=None).passed


class TestReproduceTables:

    @pytest.mark.slow
    def test_determinant_table(self, tmp_path):
        report = TableReproducer(Settings(cache_dir=str(tmp_path / "c"))).run(2)
        assert len(report.cells) == 22
        # the top N = 10 root stays 4.8e-8 above the published converged value
        assert [(c.row, c.column) for c in report.failures] == [("9", "N=10")]
        assert report.failures[0].deviation < 1e-7

    @pytest.mark.slow
    def test_matrix_table(self, tmp_path):
        report = TableReproducer(Settings(cache_dir=str(tmp_path / "c"))).run(3)
        assert len(report.cells) == 50
        assert report.passed, [c.to_dict() for c in report.failures]

    @pytest.mark.slow
    def test_lowest_energies_table(self, tmp_path):
        report = TableReproducer(Settings(cache_dir=str(tmp_path / "c"))).run(4)
        assert len(report.cells) == 30
        assert report.passed, [c.to_dict() for c in report.failures]
        assert all(c.alternate_tolerance is not None for c in report.cells)

    @pytest.mark.slow
    def test_pps_table_misses_only_low_ell(self, tmp_path):
        report = TableReproducer(Settings(cache_dir=str(tmp_path / "c"))).run(1)
        assert len(report.cells) == 50
        assert {c.column for c in report.failures} <= {"l=3", "l=4"}
        assert report.max_deviation < 5e-4

    @pytest.mark.slow
    def test_cached_rerun_is_identical(self, tmp_path):
        settings = Settings(cache_dir=str(tmp_path / "c"))
        first = TableReproducer(settings).run(2).to_dict()
        second = TableReproducer(settings).run(2).to_dict()
        assert first == second

    def test_unknown_table(self, tmp_path):
        with pytest.raises(ValueError):
            TableReproducer(Settings(), use_cache=False).run(7)

    @pytest.mark.slow
    def test_cli_strict_json(self):
        result = CliRunner().invoke(cli, ["reproduce-tables", "--table", "3", "--strict", "--format", "json"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert payload[0]["table"] == 3
        assert payload[0]["passed"]

    @pytest.mark.slow
    def test_cli_strict_exits_on_miss(self):
        result = CliRunner().invoke(cli, ["reproduce-tables", "--table", "2", "--strict", "--format", "json"])
        assert result.exit_code == 1
        payload = json.loads(result.output)
        assert not payload[0]["passed"]


class TestCheckCommand:

    def test_identities_pass(self):
        results = run_checks(Settings(), groups=("identities",))
        assert results
        assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]

    def test_pure_oscillator_oracle(self):
        results = {r.name: r for r in run_checks(Settings(), groups=("oracle",))}
        assert results["hmatrix.pure_oscillator"].passed

    def test_cli_json(self):
        result = CliRunner().invoke(cli, ["check", "--group", "identities", "--format", "json"])
        assert result.exit_code == 0, result.output
        names = [r["name"] for r in json.loads(result.output)]
        assert "bessel.orthogonality" in names
        assert {"bessel.differential_equation", "bessel.forward_shift", "bessel.lowering_identity",
                "bessel.backward_shift", "bessel.three_forms_agree"} <= set(names)
