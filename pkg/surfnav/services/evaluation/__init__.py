"""
Closed-loop trials, navigation metrics, scenario suites and planner comparison.
"""
from .models import EvaluationConfig, ScenarioSuite, SuiteEntry, TrajectoryPoint, TrialResult
from .runner import run_trial, termination
from .metrics import (
    metric_mean_velocity,
    metric_norm_length,
    metric_success_rate,
    metric_vibration,
    path_length,
    trial_metrics,
)
from .suite import BUILTIN_SCENARIOS, build_suite, get_scenario, training_surfaces_for, trial_seeds
from .comparison import (
    AggregateRow,
    ComparisonTable,
    aggregate,
    compare,
    format_table,
    write_aggregate_csv,
    write_trials_csv,
)
from .overlay import SPEED_BAND_COLORS, render_overlay, speed_color, surface_costs, write_overlay, write_trajectory_csv
