"""
Tests del arnés: ajustes, cotas, informes y experimentos.
"""

import json
import math
from fractions import Fraction

import pytest

from vinoslice.classification import class_exponent_targets
from vinoslice.counting import count_sliced
from vinoslice.harness import (
    CSV_COLUMNS,
    InsufficientPointsError,
    NonIncreasingGridError,
    ParameterDomainError,
    ReportFormatError,
    ReportWriteError,
    ZeroCountError,
    aux_growth_probe,
    bound_calculator,
    classification_fit,
    count_reports,
    count_system,
    diagonal_probe,
    emit_report,
    fit_exponent,
    lifted_bound_probe,
    parse_report,
    r1_parity_bound,
    r1_parity_kappa,
    r1_range_bound,
    run_count_grid,
    slice_s_range,
    to_entry,
    u2_probe,
    write_report,
)
from vinoslice.models import CountReport, ExperimentResult


class TestFit:
    def test_exact_power_law(self):
        fit = fit_exponent([(2, 4), (4, 16), (8, 64)], target=2)
        assert fit.slope == pytest.approx(2.0)
        assert fit.intercept == pytest.approx(0.0, abs=1e-9)
        assert fit.max_residual == pytest.approx(0.0, abs=1e-9)
        assert fit.within()

    def test_one_sided_check(self):
        fit = fit_exponent([(2, 8), (4, 64)], target=2)
        assert fit.slope == pytest.approx(3.0)
        assert not fit.within(0.5)
        assert fit.within(1.5)

    def test_huge_counts(self):
        fit = fit_exponent([(10, 10**300), (100, 10**600)])
        assert fit.slope == pytest.approx(300.0)

    def test_sliced_single_variable(self):
        points = [(X, count_sliced(1, 2, 1, X).count) for X in (4, 8, 16)]
        assert fit_exponent(points).slope == pytest.approx(1.0)

    def test_errors(self):
        with pytest.raises(InsufficientPointsError):
            fit_exponent([(2, 4)])
        with pytest.raises(NonIncreasingGridError):
            fit_exponent([(4, 4), (2, 16)])
        with pytest.raises(ZeroCountError):
            fit_exponent([(2, 4), (4, 0)])


class TestBounds:
    def test_reference_values(self):
        params = bound_calculator(3, 3, 1, 2)
        assert params.t == 3
        assert params.v == 0
        assert params.w == Fraction(9, 2)
        assert params.u == 3
        assert params.delta == 0
        targets = params.targets
        assert targets["s_max"] == Fraction(9, 2)
        assert targets["r1_range"] == 4
        assert targets["holder_s"] == 4
        assert targets["aux_exponent"] == 6
        assert targets["main_exponent"] == 3
        assert targets["u1_moment"] == 8
        assert targets["u1_exponent"] == 4
        assert targets["u2_exponent"] == 4
        assert targets["aux_heuristic_exponent"] == 6
        assert targets["kappa_max"] == 2
        assert targets["kappa_conjectural"] == 3

    def test_reference_flags(self):
        flags = bound_calculator(3, 3, 1, 2).flags
        assert flags["r1_range_ok"]
        assert flags["s_range_ok"]
        assert flags["kappa_ok"]
        assert flags["conjectural_range_ok"]
        assert not flags["aux_bound_applies"]
        assert not flags["easy_bound_applies"]
        assert flags["w_ge_u"]

    def test_slice_exponent(self):
        params = bound_calculator(4, 4, 2, 1)
        assert params.v == Fraction(1, 2)
        assert params.delta == Fraction(1, 2)
        assert params.targets["slice_exponent"] == Fraction(9, 2)

    def test_r1_range(self):
        assert r1_range_bound(5) == 12
        assert r1_parity_kappa(5) == 3
        assert r1_parity_kappa(6) == 3

    @pytest.mark.parametrize("k", range(3, 10))
    def test_parity_bound_matches_range(self, k):
        assert slice_s_range(k, 1, r1_parity_kappa(k)) == r1_parity_bound(k)

    def test_explicit_degrees(self):
        params = bound_calculator(1, 3, 1, 1, degrees=[3, 1, 0])
        assert params.t == 3
        assert params.targets["aux_heuristic_exponent"] == 2 * 2 - 3 - 4

    @pytest.mark.parametrize(
        "args",
        [(0, 3, 1, 1), (1, 3, 0, 1), (1, 2, 2, 1), (1, 3, 1, 0)],
    )
    def test_domain(self, args):
        with pytest.raises(ParameterDomainError):
            bound_calculator(*args)

    def test_bad_degrees(self):
        with pytest.raises(ParameterDomainError):
            bound_calculator(1, 3, 1, 1, degrees=[1, 2])
        with pytest.raises(ParameterDomainError):
            bound_calculator(1, 3, 1, 1, t=2, degrees=[2, 1, 0])


def _report(X: int, count: int) -> CountReport:
    return CountReport(system="sliced", count=count, method="mitm", s=2, k=3, r=1, t=2, X=X)


class TestReport:
    def test_csv_rows(self):
        text = emit_report([_report(5, 45), _report(6, 2**70)], "csv")
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1].startswith(",2,3,1,2,5,,45,mitm,")
        assert lines[2].split(",")[7] == str(2**70)

    def test_csv_empty(self):
        assert emit_report([], "csv") == ",".join(CSV_COLUMNS) + "\n"

    def test_json_round_trip(self):
        fit = fit_exponent([(2, 4), (4, 16)], experiment="demo", target=2)
        text = emit_report([_report(5, 2**70), fit, bound_calculator(1, 3, 1, 1)])
        payload = json.loads(text)
        assert payload["schema_version"] == 1
        assert [e["type"] for e in payload["entries"]] == ["count", "fit", "bounds"]
        assert payload["entries"][0]["count"] == str(2**70)

        entries = parse_report(text)
        assert entries[0]["count"] == 2**70
        assert entries[1]["points"] == [(2, 4), (4, 16)]
        reports = count_reports(entries)
        assert len(reports) == 1
        assert reports[0].count == 2**70
        assert reports[0].X == 5

    def test_experiment_is_flattened(self):
        result = ExperimentResult(experiment="demo", reports=[_report(5, 45)], stats={"errors": 0})
        types = [e["type"] for e in json.loads(emit_report([result]))["entries"]]
        assert types == ["count", "experiment"]

    def test_deterministic_without_elapsed(self):
        first = emit_report([count_sliced(2, 3, 1, 6, threads=1)], "csv")
        second = emit_report([count_sliced(2, 3, 1, 6, threads=4)], "csv")
        strip = lambda text: [line.rsplit(",", 1)[0] for line in text.splitlines()]
        assert strip(first) == strip(second)

    def test_unknown_format(self):
        with pytest.raises(ReportFormatError):
            emit_report([], "xml")

    def test_unserializable(self):
        with pytest.raises(ReportFormatError):
            to_entry(object())

    def test_dict_entries_pass_through(self):
        assert to_entry({"type": "custom", "value": 1}) == {"type": "custom", "value": 1}

    @pytest.mark.parametrize("text", ["not json", '{"entries": []}', '{"schema_version": 99}'])
    def test_parse_errors(self, text):
        with pytest.raises(ReportFormatError):
            parse_report(text)

    def test_write_to_file(self, tmp_path):
        out = tmp_path / "nested" / "report.json"
        write_report("contenido\n", out)
        assert out.read_text(encoding="utf-8") == "contenido\n"

    def test_write_to_stdout(self, capsys):
        write_report("hola\n")
        assert capsys.readouterr().out == "hola\n"

    def test_write_error(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(ReportWriteError):
            write_report("contenido", blocker / "report.json")


class TestExperiments:
    def test_count_system_dispatch(self, quadratic):
        assert count_system("sliced", 5, 2, k=3, r=1).count == 45
        assert count_system("vmvt", 3, 2, k=1).count == 19
        assert count_system("aux", 3, 1, r=1, f=quadratic).H == 3

    def test_count_system_errors(self):
        with pytest.raises(ParameterDomainError):
            count_system("unknown", 3, 1, k=2, r=1)
        with pytest.raises(ParameterDomainError):
            count_system("sliced", 3, 1, k=3)
        with pytest.raises(ParameterDomainError):
            count_system("u2", 3, 1, k=3, r=2)

    def test_grid(self):
        result = run_count_grid("sliced", [3, 4, 5], s=1, k=2, r=1)
        assert [report.count for report in result.reports] == [3, 4, 5]
        assert result.stats["counts"] == 3
        assert result.stats["errors"] == 0
        assert all(report.experiment == "grid-sliced" for report in result.reports)

    def test_grid_clipped_by_capacity(self):
        result = run_count_grid("sliced", [3, 5], s=2, k=2, r=1, capacity=3)
        assert result.reports == []
        assert result.stats["warnings"] == 1
        assert result.extra["clipped_at"] == 3

    def test_grid_rejects_bad_values(self):
        with pytest.raises(ParameterDomainError):
            run_count_grid("sliced", [], s=1, k=2, r=1)

    def test_aux_growth(self, quadratic):
        result = aux_growth_probe(quadratic, 1, 1, [4, 6, 8])
        assert result.extra["checks"]["diagonal_lower_bound"]
        assert len(result.fits) == 1
        assert result.ok

    def test_lifted_rows(self):
        result = lifted_bound_probe(1, 2, 1, [2, 3, 4])
        rows = result.extra["rows"]
        assert [row["X"] for row in rows] == [2, 3, 4]
        assert all(int(row["X_times_I"]) <= int(row["N"]) for row in rows)
        assert len(result.reports) == 6

    def test_diagonal(self):
        result = diagonal_probe([1, 2], 3, 1, [4, 6, 8])
        checks = result.extra["checks"]
        assert checks["diagonal_lower_bound_s1"]
        assert checks["diagonal_lower_bound_s2"]
        assert checks["slope_within_target_s1"]
        assert len(result.fits) == 2

    def test_u2_bound(self):
        result = u2_probe(1, 3, 2, 1, [2, 3])
        assert result.extra["checks"]["u2_upper_bound"]
        assert result.extra["target"] == 4

    def test_classification_fit(self, quadratic):
        result = classification_fit(quadratic, 2, 1, [2, 3, 4])
        histograms = result.extra["histograms"]
        assert list(histograms) == ["2", "3", "4"]
        for X, report in zip((2, 3, 4), result.reports):
            assert sum(histograms[str(X)].values()) == report.count
            assert histograms[str(X)]["S_0"] == X**4
        fit_names = {fit.experiment for fit in result.fits}
        assert "classification:S_0" in fit_names
        s0 = next(fit for fit in result.fits if fit.experiment == "classification:S_0")
        assert s0.slope == pytest.approx(4.0)
        assert math.isclose(s0.target, 4)
        assert result.extra["class_exponent_targets"] == class_exponent_targets(2, 1)
        assert result.extra["fitted_exponents"]["S_0"] == pytest.approx(4.0)


class TestAcceptanceRuns:
    GRID = [8, 12, 16, 24, 32]

    @pytest.mark.slow
    def test_aux_growth_slope(self, quadratic):
        result = aux_growth_probe(quadratic, 2, 1, self.GRID)
        assert [report.X for report in result.reports] == self.GRID
        assert result.fits[0].slope <= 4.5
        assert result.extra["checks"]["diagonal_lower_bound"]
        assert result.ok

    @pytest.mark.slow
    @pytest.mark.parametrize("s,k,r", [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
    def test_lifted_bound_is_strict(self, s, k, r):
        result = lifted_bound_probe(s, k, r, self.GRID)
        rows = result.extra["rows"]
        assert [row["X"] for row in rows] == self.GRID
        assert all(int(row["X_times_I"]) < int(row["N"]) for row in rows)
        assert result.extra["checks"]["lifted_bound_strict"]

    @pytest.mark.slow
    def test_sliced_cubic_is_diagonal(self):
        grid = [8, 12, 16, 24, 32, 40]
        result = diagonal_probe([1, 2, 3, 4], 3, 1, grid)
        assert len(result.fits) == 4
        for s, fit in zip((1, 2, 3, 4), result.fits):
            assert fit.slope <= s + 0.5
            assert result.extra["checks"][f"diagonal_lower_bound_s{s}"]
        assert result.ok
