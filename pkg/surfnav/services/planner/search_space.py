"""
Dynamic-window search space: velocity grid, admissibility and surface costs.
"""
import math
from typing import Optional

import numpy as np

from surfnav.services.costmap.models import SurfaceCostMap
from surfnav.services.world.models import CameraModel, RangeScan, RobotState
from .models import SearchSpace
from .params import PlannerParams
from .trajectory import accel_limits, pixel_trace, point_costs, rollout_grid, second_half_cost

# Turning radii beyond this are treated as straight lines
_STRAIGHT_RADIUS = 1e4


def contact_distance(vs: np.ndarray, ws: np.ndarray, points: np.ndarray, robot_radius: float) -> np.ndarray:
    """
    Arc length each constant-(v, w) motion covers before the robot disc
    touches any obstacle point.

    Args:
        vs, ws: (m,) candidate velocities
        points: (p, 2) robot-frame obstacle points
        robot_radius: Footprint radius

    Returns:
        (m,) distances; 0 when already touching, inf when never
    """
    vs = np.asarray(vs, dtype=float)
    ws = np.asarray(ws, dtype=float)
    dist = np.full(vs.shape, math.inf)
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if pts.shape[0] == 0:
        return dist

    r = robot_radius
    if np.any(np.hypot(pts[:, 0], pts[:, 1]) < r):
        return np.zeros(vs.shape)

    px = pts[None, :, 0]
    py = pts[None, :, 1]
    moving = vs > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        radius = np.where(np.abs(ws) > 0.0, vs / np.where(ws == 0.0, 1.0, ws), math.inf)
    straight = moving & (np.abs(radius) > _STRAIGHT_RADIUS)
    turning = moving & ~straight

    if np.any(straight):
        # disc centre sweeps the x axis: contact at x - sqrt(r^2 - y^2)
        lateral = r * r - py ** 2
        with np.errstate(invalid="ignore"):
            reach = px - np.sqrt(np.where(lateral >= 0.0, lateral, np.nan))
        reach = np.where((lateral >= 0.0) & (reach >= 0.0), reach, math.inf)
        dist[straight] = float(np.min(reach))

    if np.any(turning):
        big_r = radius[turning][:, None]  # signed, centre at (0, R)
        abs_r = np.abs(big_r)
        rho = np.hypot(px, py - big_r)
        psi = np.arctan2(py - big_r, px)
        phi0 = np.where(big_r > 0.0, -math.pi / 2.0, math.pi / 2.0)
        direction = np.sign(big_r)
        cos_half = (abs_r ** 2 + rho ** 2 - r * r) / (2.0 * abs_r * np.maximum(rho, 1e-12))
        touches = np.abs(rho - abs_r) <= r
        half = np.arccos(np.clip(cos_half, -1.0, 1.0))
        travel = np.mod(direction * (psi - phi0), 2.0 * math.pi)
        first = np.mod(travel - half, 2.0 * math.pi)
        arc = np.where(touches, abs_r * first, math.inf)
        dist[turning] = np.min(arc, axis=1)

    return dist


def build_search_space(
    state: RobotState,
    scan: RangeScan,
    params: PlannerParams,
    costmap: Optional[SurfaceCostMap] = None,
    camera: Optional[CameraModel] = None,
    modulated: bool = True,
) -> SearchSpace:
    """
    Lay the velocity grid over the dynamic window and score admissibility.

    The linear window is [v_curr - v_acc dt, v_curr + tau v_acc dt]: braking
    always uses the full limit. The angular window is w_curr +- tau w_acc dt.
    tau = cos(C_half) comes from the trailing half of the current command's
    rollout when ``modulated`` and a costmap are given, otherwise 1. Both
    ranges are clipped to [0, v_max] x [-w_max, w_max].

    A candidate is admissible when v <= sqrt(2 d v_acc) and
    |w| <= sqrt(2 d w_acc), with d the arc length to first contact.

    Args:
        state: Current robot state (v_curr, w_curr)
        scan: Range scan in the robot frame
        params: Planner parameters
        costmap: Costmap of the current frame, optional
        camera: Camera the costmap belongs to (required with a costmap)
        modulated: Scale the positive limits by tau

    Returns:
        SearchSpace
    """
    v_curr = min(max(state.v_curr, 0.0), params.v_max)
    w_curr = min(max(state.w_curr, -params.w_max), params.w_max)

    c_half = 0.0
    if costmap is not None:
        if camera is None:
            raise ValueError("a camera model is required to read the costmap")
        if modulated:
            c_half = second_half_cost((v_curr, w_curr), costmap, camera, params)
    v_lim, w_lim = accel_limits(c_half, params)
    tau = v_lim / params.v_acc

    v_lo = max(0.0, v_curr - params.v_acc * params.dt)
    v_hi = min(params.v_max, v_curr + v_lim * params.dt)
    w_lo = max(-params.w_max, w_curr - w_lim * params.dt)
    w_hi = min(params.w_max, w_curr + w_lim * params.dt)

    v_axis = np.unique(np.linspace(v_lo, v_hi, params.n_v))
    w_axis = np.unique(np.linspace(w_lo, w_hi, params.n_w))
    vv, ww = np.meshgrid(v_axis, w_axis, indexing="ij")
    vs = vv.ravel()
    ws = ww.ravel()

    rollouts = rollout_grid(vs, ws, params)
    clearance = contact_distance(vs, ws, scan.obstacle_points(), params.robot_radius)
    with np.errstate(invalid="ignore"):
        admissible = (vs <= np.sqrt(2.0 * clearance * params.v_acc)) & (
            np.abs(ws) <= np.sqrt(2.0 * clearance * params.w_acc)
        )

    pixels = None
    if costmap is not None:
        sur = np.sum(point_costs(rollouts, costmap, camera), axis=1)
        pixels = pixel_trace(rollouts, camera)
    else:
        sur = np.zeros(vs.shape)

    return SearchSpace(
        vs=vs,
        ws=ws,
        rollouts=rollouts,
        clearance=clearance,
        admissible=admissible,
        sur=sur,
        window=(v_lo, v_hi, w_lo, w_hi),
        tau=tau,
        c_half=c_half,
        pixels=pixels,
    )
