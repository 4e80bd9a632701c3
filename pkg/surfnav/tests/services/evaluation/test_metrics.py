"""
Tests for trial metrics.
"""
import math

import pytest

from surfnav.exceptions import MetricUnavailableError
from surfnav.services.evaluation.metrics import (
    metric_mean_velocity,
    metric_norm_length,
    metric_success_rate,
    metric_vibration,
    path_length,
    trial_metrics,
)
from surfnav.services.evaluation.models import TrajectoryPoint, TrialResult
from surfnav.utils.constants.enums import TrialOutcome


def straight_trial(outcome=TrialOutcome.REACHED, zs=(0.0, 0.0, 0.0, 0.0), v: float = 0.4) -> TrialResult:
    points = [
        TrajectoryPoint(t=0.5 * i, true_pose=(float(i), 0.0, 0.0), odom_pose=(float(i), 0.0, 0.0),
                        z=z, v=0.0 if i == 0 else v, w=0.0, surface_id=1)
        for i, z in enumerate(zs)
    ]
    return TrialResult(
        outcome=outcome, planner="dwa", scenario="line", seed=0,
        start=(0.0, 0.0), goal=(float(len(zs) - 1), 0.0), dt=0.5, trajectory=points,
    )


class TestSuccessRate:
    """Tests for metric_success_rate."""

    def test_fraction_reached(self):
        results = [straight_trial() for _ in range(7)] + [straight_trial(TrialOutcome.STUCK) for _ in range(3)]
        assert metric_success_rate(results) == pytest.approx(0.7)

    def test_no_trials(self):
        with pytest.raises(MetricUnavailableError):
            metric_success_rate([])


class TestNormLength:
    """Tests for metric_norm_length."""

    def test_straight_run(self):
        trial = straight_trial()
        assert path_length(trial) == pytest.approx(3.0)
        assert metric_norm_length(trial) == pytest.approx(1.0)

    @pytest.mark.parametrize("outcome", [TrialOutcome.STUCK, TrialOutcome.COLLIDED, TrialOutcome.TIMEOUT, TrialOutcome.FALSE_GOAL])
    def test_undefined_for_failures(self, outcome):
        with pytest.raises(MetricUnavailableError):
            metric_norm_length(straight_trial(outcome))


class TestVibrationAndSpeed:
    """Tests for metric_vibration and metric_mean_velocity."""

    def test_vibration_sums_increments(self):
        assert metric_vibration(straight_trial(zs=(0.0, 1.0, 0.0, 1.0))) == pytest.approx(3.0)

    def test_smooth_run_has_no_vibration(self):
        assert metric_vibration(straight_trial()) == 0.0

    def test_mean_velocity(self):
        assert metric_mean_velocity(straight_trial(v=0.4)) == pytest.approx(0.4)

    def test_trial_metrics_for_failed_trial(self):
        metrics = trial_metrics(straight_trial(TrialOutcome.TIMEOUT))
        assert metrics["success"] is False
        assert math.isnan(metrics["norm_length"])
