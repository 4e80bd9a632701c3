"""
`world`: generate a scenario and render it.
"""
import click
import numpy as np

from app.dependencies import CommandContext, get_scenario_config, prepare_output
from surfnav.services.world.camera import render_camera, render_top_down
from surfnav.services.world.generator import gen_world
from surfnav.utils.helpers.image_io import write_ppm
from surfnav.utils.logging.logger import get_logger
from surfnav.utils.serialization import serialize_to_json

logger = get_logger(__name__)


@click.command("world")
@click.option("--scenario", default=None, help="Built-in scenario name or scenario file")
@click.option("--pixels-per-meter", type=click.FloatRange(min=0.1), default=10.0, show_default=True)
@click.pass_obj
def world(obj: CommandContext, scenario, pixels_per_meter):
    """Render a top-down map and the start-pose camera view."""
    config = obj.run_config({"paths.scenario": scenario})
    output_dir = prepare_output(config)
    world_model = gen_world(get_scenario_config(config), config.seed)
    camera = world_model.camera or config.camera

    write_ppm(output_dir / "world_top.ppm", render_top_down(world_model, pixels_per_meter))
    write_ppm(output_dir / "world_camera.ppm", render_camera(world_model, world_model.start_pose, camera))

    ids, counts = np.unique(world_model.surface_grid, return_counts=True)
    cells = {int(sid): int(count) for sid, count in zip(ids, counts)}
    (output_dir / "world.json").write_text(
        serialize_to_json(
            {
                "name": world_model.name,
                "seed": world_model.seed,
                "extent": world_model.extent,
                "start": world_model.start_pose,
                "goal": world_model.goal,
                "surface_cells": {str(k): v for k, v in cells.items()},
                "surface_names": {str(k): world_model.surfaces[k].name for k in cells},
                "obstacles": len(world_model.obstacles),
            },
            indent=2,
            sort_keys=True,
        )
        + "\n",
        encoding="utf-8",
    )
    logger.info(f"world '{world_model.name}': surfaces {sorted(cells)}, {len(world_model.obstacles)} obstacles")
