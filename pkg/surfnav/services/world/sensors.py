"""
Simulated IMU and planar range scanner.
"""
import math
from typing import Tuple

import numpy as np

from .generator import surface_at
from .models import RangeScan, RobotState, WorldModel
from .robot import STREAM_IMU, noise_rng


def read_imu(state: RobotState, world: WorldModel, f_imu: float, window: float) -> np.ndarray:
    """
    Synthesize a window of 6-axis IMU readings at the current state.

    Rows are (a_x, a_y, a_z, w_x, w_y, w_z). Acceleration noise scales with
    ``bumpiness * |v_true|``, the vertical channel dominating the horizontal
    ones by ``1 / physics.lateral_factor``. Roll and pitch rates are pure noise
    of the same scaling; the yaw rate is ``w_true`` plus that noise.

    Args:
        state: Robot state (its v_true/w_true describe the motion)
        world: World (surface under the robot and physics constants)
        f_imu: Sample rate (Hz)
        window: Window length (s), > 0

    Returns:
        (6, N) array with N = round(f_imu * window)
    """
    if window <= 0.0:
        raise ValueError(f"IMU window must be positive, got {window}")
    n = max(1, int(round(f_imu * window)))
    surface = surface_at(world, state.true_pose[0], state.true_pose[1])
    physics = world.physics
    amplitude = surface.bumpiness * abs(state.v_true)

    readings = np.zeros((6, n))
    readings[5] = state.w_true
    if amplitude > 0.0:
        rng = noise_rng(state, STREAM_IMU)
        accel_std = physics.imu_accel_gain * amplitude
        gyro_std = physics.imu_gyro_gain * amplitude
        readings[0] = rng.normal(0.0, accel_std * physics.lateral_factor, n)
        readings[1] = rng.normal(0.0, accel_std * physics.lateral_factor, n)
        readings[2] = rng.normal(0.0, accel_std, n)
        readings[3] = rng.normal(0.0, gyro_std, n)
        readings[4] = rng.normal(0.0, gyro_std, n)
        readings[5] += rng.normal(0.0, gyro_std, n)
    return readings


def beam_angles(n_beams: int, fov: float) -> np.ndarray:
    """Beam bearings in the robot frame; a full circle excludes the duplicate endpoint."""
    if n_beams < 1:
        raise ValueError("n_beams must be >= 1")
    if n_beams == 1:
        return np.zeros(1)
    if fov >= 2.0 * math.pi - 1e-12:
        return -math.pi + 2.0 * math.pi * np.arange(n_beams) / n_beams
    return np.linspace(-fov / 2.0, fov / 2.0, n_beams)


def sense_obstacles(
    world: WorldModel,
    true_pose: Tuple[float, float, float],
    n_beams: int,
    max_range: float,
    fov: float = 2.0 * math.pi,
) -> RangeScan:
    """
    Ray-cast a planar scan against the obstacle circles.

    Args:
        world: World holding the obstacles
        true_pose: Sensor pose (x, y, heading)
        n_beams: Number of beams, >= 1
        max_range: Range reported when a beam hits nothing
        fov: Angular span of the fan centred on the heading

    Returns:
        RangeScan with per-beam ranges
    """
    angles = beam_angles(n_beams, fov)
    ranges = np.full(angles.shape, float(max_range))
    obstacles = world.obstacle_array()
    if obstacles.shape[0] == 0:
        return RangeScan(angles=angles, ranges=ranges, max_range=float(max_range))

    x, y, theta = true_pose
    dirs = np.stack([np.cos(theta + angles), np.sin(theta + angles)], axis=1)  # (b, 2)
    rel = obstacles[:, :2] - np.array([x, y])  # (m, 2)

    # |t d - rel|^2 = r^2  ->  t^2 - 2 t (d.rel) + |rel|^2 - r^2 = 0
    proj = dirs @ rel.T  # (b, m)
    c = np.sum(rel * rel, axis=1) - obstacles[:, 2] ** 2  # (m,)
    disc = proj ** 2 - c
    with np.errstate(invalid="ignore"):
        root = np.sqrt(np.where(disc >= 0.0, disc, np.nan))
    near = proj - root
    far = proj + root
    # inside a circle (c < 0) the exit point is ahead; range 0 in that case
    t_hit = np.where(c[None, :] < 0.0, 0.0, np.where(near >= 0.0, near, np.nan))
    t_hit = np.where(np.isnan(root), np.nan, t_hit)
    t_hit = np.where((far < 0.0) & (c[None, :] >= 0.0), np.nan, t_hit)

    nearest = np.nanmin(np.where(np.isnan(t_hit), np.inf, t_hit), axis=1)
    ranges = np.minimum(ranges, nearest)
    return RangeScan(angles=angles, ranges=ranges, max_range=float(max_range))
