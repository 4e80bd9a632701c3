"""
Top-down trajectory overlays and trajectory exports.
"""
import csv
import math
from pathlib import Path
from typing import Dict, Optional, Sequence

import numpy as np

from surfnav.services.predictor.cost import CostModel, navigability_cost
from surfnav.services.predictor.features import extract_batch
from surfnav.services.predictor.interface import SurfaceRegressor
from surfnav.services.world.camera import OBSTACLE_COLOR, render_top_down, value_noise
from surfnav.services.world.generator import surface_ids_at
from surfnav.services.world.models import WorldModel
from surfnav.utils.helpers.image_io import write_ppm
from surfnav.utils.logging.logger import get_logger
from .models import TrialResult

logger = get_logger(__name__)

# Trajectory colors by thirds of v_max: slow (red), medium (yellow), fast (green)
SPEED_BAND_COLORS = (
    (220, 40, 40),
    (240, 210, 40),
    (40, 200, 60),
)
START_COLOR = (40, 90, 230)
GOAL_COLOR = (255, 255, 255)

TRAJECTORY_COLUMNS = ["t", "x", "y", "theta", "odom_x", "odom_y", "odom_theta", "z", "v", "w", "surface_id"]


def speed_color(v: float, v_max: float) -> tuple:
    band = min(2, max(0, int(3.0 * abs(v) / v_max))) if v_max > 0 else 0
    return SPEED_BAND_COLORS[band]


def _surface_patch(world: WorldModel, sid: int, patch_size: int) -> np.ndarray:
    """A patch of one surface's texture seen from straight above, 1 m across."""
    texture = world.surfaces[sid].texture
    coords = (np.arange(patch_size) + 0.5) / patch_size
    gx, gy = np.meshgrid(coords, coords)
    colors = np.broadcast_to(np.asarray(texture.color, dtype=float), gx.shape + (3,)).copy()
    if texture.noise_amplitude > 0.0:
        noise = value_noise(gx * texture.frequency, gy * texture.frequency, world.seed * 1009 + sid)
        colors += texture.noise_amplitude * noise[..., None]
    return np.clip(np.rint(colors), 0, 255).astype(np.uint8)


def surface_costs(
    world: WorldModel,
    model: SurfaceRegressor,
    cost_model: CostModel,
    patch_size: int = 50,
    speed: float = 0.3,
) -> Dict[int, float]:
    """Predicted navigability cost of every surface of a world at a steady ``speed``."""
    ids = sorted(world.surfaces)
    patches = [_surface_patch(world, sid, patch_size) for sid in ids]
    vel_hist = np.vstack([np.full(patch_size // 2, speed), np.zeros(patch_size // 2)])
    image_x, vel_x = extract_batch(patches, [vel_hist] * len(ids), patch_size)
    costs = navigability_cost(model.predict_batch(image_x, vel_x), cost_model)
    return {sid: float(c) for sid, c in zip(ids, np.atleast_1d(costs))}


def _cost_background(world: WorldModel, costs: Dict[int, float], pixels_per_meter: float) -> np.ndarray:
    width = max(1, int(round(world.extent[0] * pixels_per_meter)))
    height = max(1, int(round(world.extent[1] * pixels_per_meter)))
    xs = (np.arange(width) + 0.5) / pixels_per_meter
    ys = world.extent[1] - (np.arange(height) + 0.5) / pixels_per_meter
    wx, wy = np.meshgrid(xs, ys)
    ids, _ = surface_ids_at(world, wx, wy)

    # bright is navigable
    image = np.zeros((height, width, 3), dtype=np.uint8)
    for sid in np.unique(ids):
        level = int(round(255.0 * (1.0 - min(1.0, costs.get(int(sid), 0.0) / (math.pi / 2.0)))))
        image[ids == sid] = (level, level, level)
    for obstacle in world.obstacles:
        image[np.hypot(wx - obstacle.x, wy - obstacle.y) <= obstacle.radius] = OBSTACLE_COLOR
    return image


def _stamp(image: np.ndarray, col: int, row: int, color, radius: int) -> None:
    height, width = image.shape[:2]
    r0, r1 = max(0, row - radius), min(height, row + radius + 1)
    c0, c1 = max(0, col - radius), min(width, col + radius + 1)
    if r0 < r1 and c0 < c1:
        image[r0:r1, c0:c1] = color


def render_overlay(
    world: WorldModel,
    results: Sequence[TrialResult],
    v_max: float,
    pixels_per_meter: float = 20.0,
    model: Optional[SurfaceRegressor] = None,
    cost_model: Optional[CostModel] = None,
    patch_size: int = 50,
) -> np.ndarray:
    """
    Draw trajectories over a top-down view of the world.

    The background is a per-surface predicted-cost grayscale when a model is
    given, otherwise the surface base colors. Each trajectory point takes its
    speed-band color.
    """
    if model is not None and cost_model is not None:
        image = _cost_background(world, surface_costs(world, model, cost_model, patch_size), pixels_per_meter)
    else:
        image = render_top_down(world, pixels_per_meter)

    def to_pixel(x: float, y: float):
        return int(x * pixels_per_meter), int((world.extent[1] - y) * pixels_per_meter)

    for result in results:
        for point in result.trajectory:
            col, row = to_pixel(point.true_pose[0], point.true_pose[1])
            _stamp(image, col, row, speed_color(point.v, v_max), 1)

    _stamp(image, *to_pixel(world.start_pose[0], world.start_pose[1]), START_COLOR, 3)
    _stamp(image, *to_pixel(world.goal[0], world.goal[1]), GOAL_COLOR, 3)
    return image


def write_overlay(path: Path, image: np.ndarray) -> Path:
    write_ppm(Path(path), image)
    logger.info(f"wrote overlay {path}")
    return Path(path)


def write_trajectory_csv(path: Path, result: TrialResult) -> Path:
    """One row per tick; floats are written at full precision."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRAJECTORY_COLUMNS)
        for p in result.trajectory:
            writer.writerow(
                [repr(float(x)) for x in (p.t, *p.true_pose, *p.odom_pose, p.z, p.v, p.w)] + [p.surface_id]
            )
    return Path(path)
