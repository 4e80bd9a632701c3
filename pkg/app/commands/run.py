"""
`run`: one closed-loop navigation trial.
"""
from pathlib import Path

import click

from app.dependencies import CommandContext, get_scenario_config, get_trained_model, prepare_output, write_summary
from app.schemas.reports import TrialSummary
from surfnav.services.evaluation.metrics import trial_metrics
from surfnav.services.evaluation.overlay import render_overlay, write_overlay, write_trajectory_csv
from surfnav.services.evaluation.runner import run_trial
from surfnav.services.world.generator import gen_world
from surfnav.utils.constants.enums import PlannerKind
from surfnav.utils.logging.logger import get_logger
from surfnav.utils.serialization import write_json_lines

logger = get_logger(__name__)


def _finite(value: float):
    return value if value == value and abs(value) != float("inf") else None


@click.command("run")
@click.option("--scenario", default=None, help="Built-in scenario name or scenario file")
@click.option(
    "--planner",
    type=click.Choice([k.value for k in PlannerKind]),
    default=PlannerKind.SURFACE.value,
    show_default=True,
)
@click.option("--model", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Trained model file")
@click.option("--debug", "record_debug", is_flag=True, default=False, help="Write per-tick planner records")
@click.pass_obj
def run(obj: CommandContext, scenario, planner, model, record_debug):
    """Drive one trial and write its trajectory, overlay and summary."""
    config = obj.run_config({
        "paths.scenario": scenario,
        "paths.model_file": model,
        "evaluation.record_debug": True if record_debug else None,
    })
    output_dir = prepare_output(config)
    kind = PlannerKind(planner)

    regressor, cost_model = get_trained_model(config) if kind == PlannerKind.SURFACE else (None, None)
    scenario_config = get_scenario_config(config)
    world_model = gen_world(scenario_config, config.seed)
    result = run_trial(
        world_model,
        kind,
        regressor,
        cost_model,
        config.planner,
        config.seed,
        camera=world_model.camera or config.camera,
        config=config.evaluation,
        sampling=config.sampling,
        scenario=scenario_config.name,
    )

    write_trajectory_csv(output_dir / "trajectory.csv", result)
    overlay = render_overlay(
        world_model,
        [result],
        config.planner.v_max,
        config.evaluation.overlay_pixels_per_meter,
        regressor,
        cost_model,
        config.sampling.patch_size,
    )
    write_overlay(output_dir / "overlay.ppm", overlay)
    if config.evaluation.record_debug:
        write_json_lines(output_dir / "planner_debug.jsonl", result.debug)

    metrics = trial_metrics(result)
    write_summary(output_dir, TrialSummary(
        scenario=result.scenario,
        planner=result.planner,
        seed=result.seed,
        outcome=result.outcome.value,
        duration=result.duration,
        norm_length=_finite(metrics["norm_length"]),
        vibration=metrics["vibration"],
        mean_velocity=metrics["mean_velocity"],
        stop_ticks=result.stop_ticks,
        window_violations=result.window_violations,
        min_clearance=_finite(result.min_clearance),
        false_goal_time=result.false_goal_time,
    ))
