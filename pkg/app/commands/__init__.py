"""
Command-line interface: one module per subcommand.
"""
from pathlib import Path

import click

from app.dependencies import CommandContext
from app.commands import collect, costmap, evaluate, run, train, world


@click.group(help="Surface-aware navigation: collect, train, predict costmaps, navigate, evaluate.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML or JSON run configuration",
)
@click.option("--seed", type=int, default=None, help="Global seed")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker cap for independent trials")
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory for command outputs",
)
@click.pass_context
def cli(ctx: click.Context, config_path, seed, jobs, output_dir):
    ctx.obj = CommandContext(
        config_path=config_path,
        overrides={"seed": seed, "jobs": jobs, "paths.output_dir": output_dir},
    )


cli.add_command(world.world)
cli.add_command(collect.collect)
cli.add_command(train.train)
cli.add_command(costmap.costmap)
cli.add_command(run.run)
cli.add_command(evaluate.evaluate)
