"""
Full-image surface costmap assembly.
"""
import math

import numpy as np

from surfnav.services.predictor.cost import CostModel, navigability_cost
from surfnav.services.predictor.features import extract_batch
from surfnav.services.predictor.interface import SurfaceRegressor
from surfnav.utils.constants.enums import SamplingMode
from surfnav.utils.helpers.geometry import resample_bilinear, resample_nearest, to_gray
from surfnav.utils.logging.logger import get_logger
from .models import SamplingConfig, SurfaceCostMap
from .resize import resize_image
from .sampling import select_patches, uniform_count, uniform_patches
from .segmentation import weak_segment

logger = get_logger(__name__)


def build_costmap(
    image: np.ndarray,
    vel_hist: np.ndarray,
    model: SurfaceRegressor,
    cost_model: CostModel,
    config: SamplingConfig = None,
) -> SurfaceCostMap:
    """
    Predict a navigability cost for every pixel of a camera image.

    Hierarchical mode resizes to multiples of 4n, segments, selects 4n/2n/n
    patches and predicts one cost per patch. Uniform mode resizes to
    multiples of n and predicts every n x n patch. Every patch shares the
    current velocity history. The painted raster is resized back to the
    input size.

    Args:
        image: (h, w, 3) uint8 RGB image
        vel_hist: (2, n/2) velocity history of the robot
        model: Trained regressor
        cost_model: Cost weights and normalization
        config: Sampling settings

    Returns:
        SurfaceCostMap the size of ``image``
    """
    config = config or SamplingConfig()
    n = config.patch_size
    height, width = image.shape[:2]
    mode = SamplingMode(config.mode)

    base = 4 * n if mode == SamplingMode.HIERARCHICAL else n
    resized = resize_image(image, base)
    new_h, new_w = resized.shape[:2]

    if mode == SamplingMode.HIERARCHICAL:
        seg = weak_segment(to_gray(resized), config)
        patches = select_patches(seg, n, config.xi, config.patch_rule)
    else:
        patches = uniform_patches(new_w, new_h, n)

    crops = [resized[p.y:p.y + p.side, p.x:p.x + p.side] for p in patches.patches]
    image_x, vel_x = extract_batch(crops, [vel_hist] * len(crops), n)
    costs = np.asarray(navigability_cost(model.predict_batch(image_x, vel_x), cost_model), dtype=float)

    painted = np.empty((new_h, new_w))
    provenance = np.empty((new_h, new_w), dtype=np.int32)
    for index, (p, cost) in enumerate(zip(patches.patches, costs)):
        painted[p.y:p.y + p.side, p.x:p.x + p.side] = cost
        provenance[p.y:p.y + p.side, p.x:p.x + p.side] = index

    values = np.clip(resample_bilinear(painted, width, height), 0.0, math.pi / 2.0)
    logger.debug(
        f"costmap from {len(patches)} patches ({uniform_count(new_w, new_h, n)} in the uniform grid), "
        f"sides {patches.side_counts()}"
    )
    return SurfaceCostMap(
        values=values,
        provenance=resample_nearest(provenance, width, height),
        patches=patches,
        patch_costs=costs,
        resized_shape=(new_w, new_h),
        mode=mode,
    )
