"""
Differential-drive (unicycle) robot with surface-dependent slip.
"""
import math
from typing import Tuple

import numpy as np

from .generator import surface_at
from .models import RobotState, SurfaceSpec, WorldModel
from surfnav.utils.helpers.geometry import wrap_angle

# Stream ids keep the noise of different channels independent
STREAM_VERTICAL = 1
STREAM_IMU = 2


def effective_slip(surface: SurfaceSpec, v: float, sink_reference_speed: float) -> float:
    """
    Linear slip including speed-dependent sinking on deformable ground.

    Equals ``slip_lin`` when the surface is not deformable.
    """
    sinking = surface.deformability * min(1.0, abs(v) / sink_reference_speed)
    return surface.slip_lin + (1.0 - surface.slip_lin) * sinking


def integrate_unicycle(pose: Tuple[float, float, float], v: float, w: float, dt: float) -> Tuple[float, float, float]:
    """Exact constant-(v, w) arc integration over ``dt``."""
    x, y, theta = pose
    if abs(w) < 1e-12:
        return x + v * math.cos(theta) * dt, y + v * math.sin(theta) * dt, theta
    theta_next = theta + w * dt
    radius = v / w
    return (
        x + radius * (math.sin(theta_next) - math.sin(theta)),
        y - radius * (math.cos(theta_next) - math.cos(theta)),
        float(wrap_angle(theta_next)),
    )


def noise_rng(state: RobotState, stream: int) -> np.random.Generator:
    """Generator seeded by (seed, tick, stream) so noisy updates are pure."""
    return np.random.default_rng([state.seed & 0xFFFFFFFF, state.tick, stream])


def step(state: RobotState, cmd: Tuple[float, float], world: WorldModel, dt: float) -> RobotState:
    """
    Advance the robot by one control interval.

    The true pose integrates the commanded velocities reduced by the slip of
    the surface under the robot; wheel odometry integrates the commanded
    velocities. The vertical displacement is redrawn from a zero-mean normal
    with std ``bumpiness * |v_true|``. Stuck time accumulates while the
    effective slip is at least ``physics.stuck_slip`` and v > 0.

    Args:
        state: Current state
        cmd: Commanded (v, w)
        world: World the robot moves in
        dt: Control interval (s), > 0

    Returns:
        The next state
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    v, w = float(cmd[0]), float(cmd[1])

    surface = surface_at(world, state.true_pose[0], state.true_pose[1])
    slip = effective_slip(surface, v, world.physics.sink_reference_speed)
    v_true = (1.0 - slip) * v
    w_true = (1.0 - surface.slip_ang) * w

    true_pose = integrate_unicycle(state.true_pose, v_true, w_true, dt)
    odom_pose = integrate_unicycle(state.odom_pose, v, w, dt)

    sigma = surface.bumpiness * abs(v_true)
    z = float(noise_rng(state, STREAM_VERTICAL).normal(0.0, sigma)) if sigma > 0.0 else 0.0

    stuck = slip >= world.physics.stuck_slip and v > 0.0
    return state.evolve(
        true_pose=true_pose,
        odom_pose=odom_pose,
        z=z,
        v_curr=v,
        w_curr=w,
        v_true=v_true,
        w_true=w_true,
        stuck_time=state.stuck_time + dt if stuck else 0.0,
        t=state.t + dt,
        tick=state.tick + 1,
    )
