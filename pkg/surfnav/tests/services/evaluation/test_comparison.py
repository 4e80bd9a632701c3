"""
Tests for planner comparison tables.
"""
import csv
import math

import pytest

from surfnav.exceptions import EmptySuiteError
from surfnav.services.evaluation.comparison import (
    AGGREGATE_COLUMNS,
    TRIAL_COLUMNS,
    ComparisonTable,
    aggregate,
    compare,
    format_table,
    write_aggregate_csv,
    write_trials_csv,
)
from surfnav.services.evaluation.models import EvaluationConfig, ScenarioSuite
from surfnav.services.evaluation.suite import build_suite
from surfnav.services.planner.params import PlannerParams
from surfnav.utils.constants.enums import PlannerKind, TrialOutcome
from .test_metrics import straight_trial

PARAMS = PlannerParams()
SHORT = EvaluationConfig(t_max=3.0)


def cell_values(table):
    return [(r.scenario, r.planner, r.trials, r.success_rate, r.vibration, r.mean_velocity) for r in table.rows]


class TestAggregate:
    """Tests for per-cell aggregation."""

    def test_means(self):
        results = [straight_trial(zs=(0.0, 1.0, 0.0, 1.0)), straight_trial(TrialOutcome.STUCK)]
        row = aggregate(results, "line", "dwa")
        assert row.trials == 2
        assert row.success_rate == 0.5
        assert row.norm_length == pytest.approx(1.0)
        assert row.vibration == pytest.approx(1.5)

    def test_no_successes(self):
        row = aggregate([straight_trial(TrialOutcome.TIMEOUT)], "line", "dwa")
        assert math.isnan(row.norm_length)


class TestCompare:
    """Tests for compare."""

    def test_runs_are_reproducible(self, small_camera):
        suite = build_suite(["flat"], trials=2, base_seed=3)
        first = compare(suite, None, None, PARAMS, small_camera, SHORT, planners=[PlannerKind.DWA])
        second = compare(suite, None, None, PARAMS, small_camera, SHORT, planners=[PlannerKind.DWA])
        assert len(first.results) == 2
        assert [r.trajectory for r in first.results] == [r.trajectory for r in second.results]
        assert cell_values(first) == cell_values(second)

    def test_worker_pool_keeps_order(self, small_camera):
        suite = build_suite(["flat", "scenario-1"], trials=2, base_seed=3)
        serial = compare(suite, None, None, PARAMS, small_camera, SHORT, planners=[PlannerKind.DWA])
        pooled = compare(suite, None, None, PARAMS, small_camera, SHORT, planners=[PlannerKind.DWA], jobs=2)
        assert [(r.scenario, r.seed) for r in pooled.results] == [(r.scenario, r.seed) for r in serial.results]
        assert [r.trajectory for r in pooled.results] == [r.trajectory for r in serial.results]
        assert cell_values(pooled) == cell_values(serial)

    def test_empty_suite(self):
        with pytest.raises(EmptySuiteError):
            compare(ScenarioSuite(), None, None, PARAMS, planners=[PlannerKind.DWA])

    def test_surface_planner_needs_model(self):
        suite = build_suite(["flat"], trials=1, base_seed=3)
        with pytest.raises(ValueError):
            compare(suite, None, None, PARAMS, planners=[PlannerKind.SURFACE])


class TestOutputs:
    """Tests for the CSV files and the text table."""

    def test_trials_csv(self, tmp_path):
        path = write_trials_csv(tmp_path / "trials.csv", [straight_trial(), straight_trial(TrialOutcome.STUCK)])
        rows = list(csv.reader(path.open()))
        assert rows[0] == TRIAL_COLUMNS
        assert rows[1][3] == "reached"
        assert rows[2][5] == "nan"

    def test_aggregate_csv_and_table(self, tmp_path):
        table = ComparisonTable(rows=[
            aggregate([straight_trial()], "line", "surface"),
            aggregate([straight_trial(TrialOutcome.STUCK)], "line", "dwa"),
        ])
        rows = list(csv.reader(write_aggregate_csv(tmp_path / "aggregate.csv", table).open()))
        assert rows[0] == AGGREGATE_COLUMNS
        assert len(rows) == 3

        text = format_table(table).splitlines()
        assert len(text) == 4
        assert text[3].split()[:2] == ["line", "dwa"]
        assert " - " in text[3]
        assert table.row("line", "surface").success_rate == 1.0
