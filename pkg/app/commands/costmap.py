"""
`costmap`: predict a surface costmap for one camera image.
"""
from pathlib import Path

import click
import numpy as np

from app.dependencies import CommandContext, get_trained_model, prepare_output, write_summary
from app.schemas.reports import CostmapSummary
from surfnav.exceptions import ImageFormatError
from surfnav.services.costmap.builder import build_costmap
from surfnav.services.costmap.sampling import uniform_count
from surfnav.services.costmap.storage import write_costmap
from surfnav.utils.constants.enums import SamplingMode
from surfnav.utils.helpers.image_io import read_netpbm
from surfnav.utils.logging.logger import get_logger

logger = get_logger(__name__)


@click.command("costmap")
@click.argument("image", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--model", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Trained model file")
@click.option("--uniform", is_flag=True, default=False, help="Predict on the uniform n-grid instead of 4n/2n/n patches")
@click.option("--speed", type=float, default=0.3, show_default=True, help="Constant linear velocity history (m/s)")
@click.option("--turn-rate", type=float, default=0.0, show_default=True, help="Constant angular velocity history (rad/s)")
@click.pass_obj
def costmap(obj: CommandContext, image, model, uniform, speed, turn_rate):
    """Write IMAGE's costmap as 16-bit PGM plus a patch sidecar."""
    extra = {"paths.model_file": model}
    if uniform:
        extra["sampling.mode"] = SamplingMode.UNIFORM.value
    config = obj.run_config(extra)
    output_dir = prepare_output(config)

    pixels = read_netpbm(image)
    if pixels.ndim != 3:
        raise ImageFormatError(f"{image} is a grayscale image; the costmap needs RGB (P6)")
    if pixels.dtype != np.uint8:
        pixels = (pixels // 257).astype(np.uint8)
    regressor, cost_model = get_trained_model(config)
    sampling = config.sampling
    if sampling.patch_size != regressor.patch_size:
        logger.warning(f"using the model's patch size {regressor.patch_size} instead of {sampling.patch_size}")
        sampling = sampling.model_copy(update={"patch_size": regressor.patch_size})

    n = sampling.patch_size
    vel_hist = np.vstack([np.full(n // 2, speed), np.full(n // 2, turn_rate)])
    result = build_costmap(pixels, vel_hist, regressor, cost_model, sampling)
    pgm_path, sidecar_path = write_costmap(output_dir, result, stem=Path(image).stem)

    resized_w, resized_h = result.resized_shape
    grid = uniform_count(resized_w, resized_h, n)
    count = len(result.patches.patches)
    write_summary(output_dir, CostmapSummary(
        image=str(image),
        mode=SamplingMode(sampling.mode).value,
        resized_width=resized_w,
        resized_height=resized_h,
        patch_count=count,
        uniform_patch_count=grid,
        reduction=1.0 - count / grid,
        side_counts=result.patches.side_counts(),
        mean_cost=float(result.values.mean()),
        costmap_file=pgm_path.name,
        patches_file=sidecar_path.name,
    ))
    logger.info(f"{count} patches ({grid} on the uniform grid), mean cost {result.values.mean():.3f}")
