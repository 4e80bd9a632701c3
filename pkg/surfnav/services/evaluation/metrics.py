"""
Trial metrics.
"""
import math
from typing import Sequence

import numpy as np

from surfnav.exceptions import MetricUnavailableError
from .models import TrialResult


def metric_success_rate(results: Sequence[TrialResult]) -> float:
    """Fraction of trials that reached the goal."""
    if not results:
        raise MetricUnavailableError("success rate needs at least one trial")
    return sum(1 for r in results if r.success) / len(results)


def path_length(result: TrialResult) -> float:
    xy = np.array([p.true_pose[:2] for p in result.trajectory], dtype=float)
    if xy.shape[0] < 2:
        return 0.0
    return float(np.sum(np.hypot(*np.diff(xy, axis=0).T)))


def metric_norm_length(result: TrialResult) -> float:
    """
    True path length over the straight start-goal distance.

    Raises:
        MetricUnavailableError: the trial did not reach its goal
    """
    if not result.success:
        raise MetricUnavailableError(f"normalized length is undefined for a {result.outcome.value} trial")
    straight = math.hypot(result.goal[0] - result.start[0], result.goal[1] - result.start[1])
    if straight <= 0.0:
        raise MetricUnavailableError("start and goal coincide")
    return path_length(result) / straight


def metric_vibration(result: TrialResult) -> float:
    """Sum of absolute vertical displacement increments."""
    z = np.array([p.z for p in result.trajectory], dtype=float)
    if z.size < 2:
        return 0.0
    return float(np.sum(np.abs(np.diff(z))))


def metric_mean_velocity(result: TrialResult) -> float:
    """Time-weighted mean commanded linear velocity."""
    t = np.array([p.t for p in result.trajectory], dtype=float)
    if t.size < 2 or t[-1] <= t[0]:
        return 0.0
    # the command stored with a point was held over the interval ending there
    v = np.array([p.v for p in result.trajectory[1:]], dtype=float)
    return float(np.sum(v * np.diff(t)) / (t[-1] - t[0]))


def trial_metrics(result: TrialResult) -> dict:
    """All per-trial metrics; normalized length is NaN for failed trials."""
    return {
        "success": result.success,
        "norm_length": metric_norm_length(result) if result.success else float("nan"),
        "vibration": metric_vibration(result),
        "mean_velocity": metric_mean_velocity(result),
    }
