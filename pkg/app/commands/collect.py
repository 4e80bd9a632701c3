"""
`collect`: autonomous data collection into a dataset directory.
"""
from pathlib import Path

import click
import numpy as np

from app.dependencies import CommandContext, get_scenario_config, prepare_output, write_summary
from app.schemas.reports import CollectionSummary, SurfaceCollectionSummary
from surfnav.services.collection.collector import collect_surfaces
from surfnav.services.collection.dataset import save_dataset
from surfnav.services.world.generator import gen_world
from surfnav.utils.logging.logger import get_logger

logger = get_logger(__name__)


@click.command("collect")
@click.option("--dataset", type=click.Path(file_okay=False, path_type=Path), default=None, help="Dataset directory")
@click.option(
    "--scenario",
    default=None,
    help="Collect on this scenario's world instead of one world per configured surface",
)
@click.pass_obj
def collect(obj: CommandContext, dataset, scenario):
    """Run every maneuver plan and write labelled samples."""
    extra = {"paths.dataset_dir": dataset}
    if scenario is not None:
        extra.update({"paths.scenario": scenario, "collection.per_surface": False})
    config = obj.run_config(extra)
    output_dir = prepare_output(config)

    world = None
    if not config.collection.per_surface:
        world = gen_world(get_scenario_config(config), config.seed)
    results = collect_surfaces(
        config.camera,
        config.collection,
        config.planner,
        config.sampling.patch_size,
        config.seed,
        world=world,
        physics=config.physics,
    )

    samples = [s for result in results for s in result.samples]
    save_dataset(samples, Path(config.paths.dataset_dir))

    by_surface = {}
    for result in results:
        for sample in result.samples:
            by_surface.setdefault(sample.surface_id, []).append(sample)
    rows = []
    for sid, group in sorted(by_surface.items()):
        owners = [r for r in results if r.surface_id in (sid, None)]
        rows.append(SurfaceCollectionSummary(
            surface_id=sid,
            samples=len(group),
            aborted=any(r.aborted for r in owners),
            fallback_ticks=sum(r.fallback_ticks for r in owners),
            mean_d_error=float(np.mean([s.d_error_signed for s in group])),
            mean_theta_error=float(np.mean([s.theta_error_signed for s in group])),
            diagnostics=[d for r in owners for d in r.diagnostics],
        ))
    write_summary(output_dir, CollectionSummary(dataset_dir=config.paths.dataset_dir, total_samples=len(samples), surfaces=rows))
    logger.info(f"collected {len(samples)} samples on surfaces {sorted(by_surface)}")
