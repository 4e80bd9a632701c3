"""
Planner comparison over a scenario suite.
"""
import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from surfnav.exceptions import EmptySuiteError
from surfnav.services.costmap.models import SamplingConfig
from surfnav.services.planner.params import PlannerParams
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.interface import SurfaceRegressor
from surfnav.services.world.generator import gen_world
from surfnav.services.world.models import CameraModel
from surfnav.utils.constants.enums import PlannerKind
from surfnav.utils.logging.logger import get_logger
from .metrics import metric_success_rate, trial_metrics
from .models import EvaluationConfig, ScenarioSuite, TrialResult
from .runner import run_trial

logger = get_logger(__name__)

TRIAL_COLUMNS = [
    "scenario", "planner", "seed", "outcome", "success",
    "norm_length", "vibration", "mean_velocity_cmd", "duration", "stop_ticks",
]
AGGREGATE_COLUMNS = [
    "scenario", "planner", "trials", "success_rate",
    "norm_length", "vibration", "mean_velocity_cmd",
]


@dataclass
class AggregateRow:
    scenario: str
    planner: str
    trials: int
    success_rate: float
    norm_length: float  # mean over reached trials, NaN if none
    vibration: float
    mean_velocity: float


@dataclass
class ComparisonTable:
    results: List[TrialResult] = field(default_factory=list)
    rows: List[AggregateRow] = field(default_factory=list)

    def row(self, scenario: str, planner: str) -> Optional[AggregateRow]:
        return next((r for r in self.rows if r.scenario == scenario and r.planner == planner), None)


@dataclass(frozen=True)
class _TrialJob:
    scenario: str
    config: object
    planner: PlannerKind
    seed: int


def _run_job(job: _TrialJob, model, cost_model, params, camera, evaluation, sampling) -> TrialResult:
    world = gen_world(job.config, job.seed)
    use_model = job.planner == PlannerKind.SURFACE
    return run_trial(
        world,
        job.planner,
        model if use_model else None,
        cost_model if use_model else None,
        params,
        job.seed,
        camera=world.camera or camera,
        config=evaluation,
        sampling=sampling,
        scenario=job.scenario,
    )


def aggregate(results: Sequence[TrialResult], scenario: str, planner: str) -> AggregateRow:
    """Mean metrics of one (scenario, planner) cell."""
    metrics = [trial_metrics(r) for r in results]
    lengths = [m["norm_length"] for m in metrics if m["success"]]
    return AggregateRow(
        scenario=scenario,
        planner=planner,
        trials=len(results),
        success_rate=metric_success_rate(results),
        norm_length=float(np.mean(lengths)) if lengths else float("nan"),
        vibration=float(np.mean([m["vibration"] for m in metrics])),
        mean_velocity=float(np.mean([m["mean_velocity"] for m in metrics])),
    )


def compare(
    suite: ScenarioSuite,
    model: Optional[SurfaceRegressor],
    cost_model: Optional[CostModel],
    params: PlannerParams,
    camera: Optional[CameraModel] = None,
    evaluation: Optional[EvaluationConfig] = None,
    sampling: Optional[SamplingConfig] = None,
    planners: Optional[Sequence[PlannerKind]] = None,
    jobs: int = 1,
) -> ComparisonTable:
    """
    Run every planner on every seeded trial of a suite and aggregate.

    Trials are independent; with ``jobs`` > 1 they run in worker processes.
    Results keep suite order regardless of completion order.

    Raises:
        EmptySuiteError: the suite holds no trials
    """
    evaluation = evaluation or EvaluationConfig()
    planners = [PlannerKind(p) for p in (planners or evaluation.planners)]
    if suite.total_trials == 0 or not planners:
        raise EmptySuiteError("nothing to compare: the suite has no trials or no planners")
    if PlannerKind.SURFACE in planners and (model is None or cost_model is None):
        raise ValueError("comparing the surface-aware planner needs a trained model")

    work = [
        _TrialJob(entry.name, entry.config, planner, seed)
        for entry in suite.entries
        for planner in planners
        for seed in entry.seeds
    ]
    shared = (model, cost_model, params, camera, evaluation, sampling)
    logger.info(f"running {len(work)} trials with {jobs} worker(s)")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_job, job, *shared) for job in work]
            results = [f.result() for f in futures]
    else:
        results = [_run_job(job, *shared) for job in work]

    table = ComparisonTable(results=results)
    for entry in suite.entries:
        for planner in planners:
            cell = [r for r in results if r.scenario == entry.name and r.planner == planner.value]
            if cell:
                table.rows.append(aggregate(cell, entry.name, planner.value))
    return table


def _fmt(value) -> str:
    if isinstance(value, float):
        return "nan" if math.isnan(value) else repr(value)
    return str(value)


def write_trials_csv(path: Path, results: Sequence[TrialResult]) -> Path:
    """One row per trial; mean velocity is the commanded velocity."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRIAL_COLUMNS)
        for r in results:
            m = trial_metrics(r)
            writer.writerow([_fmt(x) for x in (
                r.scenario, r.planner, r.seed, r.outcome.value, int(m["success"]),
                m["norm_length"], m["vibration"], m["mean_velocity"], r.duration, r.stop_ticks,
            )])
    return Path(path)


def write_aggregate_csv(path: Path, table: ComparisonTable) -> Path:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(AGGREGATE_COLUMNS)
        for row in table.rows:
            writer.writerow([_fmt(x) for x in (
                row.scenario, row.planner, row.trials, row.success_rate,
                row.norm_length, row.vibration, row.mean_velocity,
            )])
    return Path(path)


def format_table(table: ComparisonTable) -> str:
    """Fixed-width text rendering of the aggregate rows."""
    header = f"{'scenario':<12} {'planner':<8} {'trials':>6} {'success':>8} {'norm len':>9} {'vibration':>10} {'v_cmd':>7}"
    lines = [header, "-" * len(header)]
    for row in table.rows:
        length = "-" if math.isnan(row.norm_length) else f"{row.norm_length:.3f}"
        lines.append(
            f"{row.scenario:<12} {row.planner:<8} {row.trials:>6d} {row.success_rate:>8.2f} "
            f"{length:>9} {row.vibration:>10.3f} {row.mean_velocity:>7.3f}"
        )
    return "\n".join(lines)
