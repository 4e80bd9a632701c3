"""
`eval`: compare planners over a scenario suite.
"""
from pathlib import Path

import click

from app.dependencies import CommandContext, get_scenario_config, get_trained_model, prepare_output, write_summary
from app.schemas.reports import AggregateSummary, EvaluationSummary
from surfnav.services.evaluation.comparison import compare, format_table, write_aggregate_csv, write_trials_csv
from surfnav.services.evaluation.overlay import render_overlay, write_overlay
from surfnav.services.evaluation.suite import build_suite
from surfnav.services.world.generator import gen_world
from surfnav.utils.constants.enums import PlannerKind
from surfnav.utils.logging.logger import get_logger

logger = get_logger(__name__)


@click.command("eval")
@click.option("--scenario", "scenarios", multiple=True, help="Scenario to evaluate (repeatable)")
@click.option(
    "--planner",
    "planners",
    type=click.Choice([k.value for k in PlannerKind]),
    multiple=True,
    help="Planner to evaluate (repeatable)",
)
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Trials per scenario and planner")
@click.option("--model", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Trained model file")
@click.pass_obj
def evaluate(obj: CommandContext, scenarios, planners, trials, model):
    """Run every planner on every trial and write per-trial and aggregate tables."""
    config = obj.run_config({
        "paths.model_file": model,
        "evaluation.scenarios": list(scenarios) or None,
        "evaluation.planners": list(planners) or None,
        "evaluation.trials": trials,
    })
    output_dir = prepare_output(config)
    evaluation = config.evaluation
    kinds = [PlannerKind(p) for p in evaluation.planners]

    configs = {name: get_scenario_config(config, name) for name in evaluation.scenarios}
    suite = build_suite(evaluation.scenarios, evaluation.trials, config.seed, configs)
    regressor, cost_model = get_trained_model(config) if PlannerKind.SURFACE in kinds else (None, None)

    table = compare(
        suite,
        regressor,
        cost_model,
        config.planner,
        camera=config.camera,
        evaluation=evaluation,
        sampling=config.sampling,
        planners=kinds,
        jobs=config.jobs,
    )
    write_trials_csv(output_dir / "trials.csv", table.results)
    write_aggregate_csv(output_dir / "aggregate.csv", table)
    text = format_table(table)
    (output_dir / "table.txt").write_text(text + "\n", encoding="utf-8")

    # one overlay per scenario, drawn on the world of its first seed
    for entry in suite.entries:
        first = entry.seeds[0]
        shown = [r for r in table.results if r.scenario == entry.name and r.seed == first]
        world_model = gen_world(entry.config, first)
        overlay = render_overlay(
            world_model, shown, config.planner.v_max, evaluation.overlay_pixels_per_meter,
            regressor, cost_model, config.sampling.patch_size,
        )
        write_overlay(output_dir / f"overlay_{Path(entry.name).stem}.ppm", overlay)

    write_summary(output_dir, EvaluationSummary(
        scenarios=suite.names(),
        planners=[k.value for k in kinds],
        trials_per_cell=evaluation.trials,
        rows=[
            AggregateSummary(
                scenario=row.scenario,
                planner=row.planner,
                trials=row.trials,
                success_rate=row.success_rate,
                norm_length=None if row.norm_length != row.norm_length else row.norm_length,
                vibration=row.vibration,
                mean_velocity=row.mean_velocity,
            )
            for row in table.rows
        ],
    ))
    click.echo(text)
