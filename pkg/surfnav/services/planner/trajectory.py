"""
Candidate rollouts, their surface cost and the cost-modulated acceleration limits.
"""
import math
from typing import Tuple

import numpy as np

from surfnav.services.costmap.models import SurfaceCostMap
from surfnav.services.world.camera import project_to_pixels
from surfnav.services.world.models import CameraModel
from .params import PlannerParams


def rollout_times(params: PlannerParams) -> np.ndarray:
    return np.arange(params.s_num + 1) * params.dt


def rollout(v: float, w: float, params: PlannerParams) -> np.ndarray:
    """
    Robot-frame points of a candidate at t_i = i * dt, i = 0..s_num.

    Uses the extrapolation x = v cos(w t) t, y = v sin(w t) t rather than
    arc integration.
    """
    return rollout_grid(np.array([v], dtype=float), np.array([w], dtype=float), params)[0]


def rollout_grid(vs: np.ndarray, ws: np.ndarray, params: PlannerParams) -> np.ndarray:
    """Rollouts of many candidates at once, shape (m, s_num + 1, 2)."""
    t = rollout_times(params)[None, :]
    vs = np.asarray(vs, dtype=float)[:, None]
    ws = np.asarray(ws, dtype=float)[:, None]
    x = vs * np.cos(ws * t) * t
    y = vs * np.sin(ws * t) * t
    return np.stack([x, y], axis=-1)


def point_costs(points: np.ndarray, costmap: SurfaceCostMap, camera: CameraModel) -> np.ndarray:
    """
    Costmap value under every rollout point; off-image points read the border.

    Args:
        points: (..., 2) robot-frame ground points
        costmap: Costmap of the current frame, same size as the camera image
        camera: Camera the costmap was built from

    Returns:
        Array of shape points.shape[:-1]
    """
    flat = np.asarray(points, dtype=float).reshape(-1, 2)
    cols, rows = project_to_pixels(flat, camera).indices()
    height, width = costmap.values.shape
    cols = np.clip(cols, 0, width - 1)
    rows = np.clip(rows, 0, height - 1)
    return costmap.values[rows, cols].reshape(points.shape[:-1])


def pixel_trace(points: np.ndarray, camera: CameraModel) -> np.ndarray:
    """Border-clamped image coordinates (x_img, y_img) of robot-frame points, shape points.shape."""
    points = np.asarray(points, dtype=float)
    return project_to_pixels(points.reshape(-1, 2), camera).pixels.reshape(points.shape)


def surface_cost(points: np.ndarray, costmap: SurfaceCostMap, camera: CameraModel) -> float:
    """Sum of costmap values along one rollout (all s_num + 1 points)."""
    return float(np.sum(point_costs(points, costmap, camera)))


def second_half_cost(
    current: Tuple[float, float],
    costmap: SurfaceCostMap,
    camera: CameraModel,
    params: PlannerParams,
) -> float:
    """
    Mean cost over the trailing half of the current command's rollout.

    With h = floor(s_num / 2) the mean runs over indices h+1..s_num.
    """
    costs = point_costs(rollout(current[0], current[1], params), costmap, camera)
    h = params.s_num // 2
    return float(np.mean(costs[h + 1:]))


def accel_limits(c_half: float, params: PlannerParams) -> Tuple[float, float]:
    """Acceleration limits scaled by tau = cos(c_half), tau kept in [0, 1]."""
    tau = min(1.0, max(0.0, math.cos(c_half)))
    return tau * params.v_acc, tau * params.w_acc
