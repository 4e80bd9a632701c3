"""
Autonomous data collection: execute maneuver plans and emit labelled samples.
"""
import math
from collections import deque
from typing import Iterable, List, Optional

import numpy as np

from surfnav.exceptions import ConfigurationError
from surfnav.services.planner.implementation import BaselineDWAPlanner
from surfnav.services.planner.params import PlannerParams
from surfnav.services.world.camera import render_camera
from surfnav.services.world.generator import gen_world, surface_at
from surfnav.services.world.library import library_surfaces
from surfnav.services.world.models import (
    CameraModel,
    PhysicsParams,
    PixelWindow,
    RangeScan,
    RobotState,
    ScenarioConfig,
    WorldModel,
)
from surfnav.services.world.robot import step
from surfnav.services.world.sensors import read_imu, sense_obstacles
from surfnav.utils.constants.enums import Localization
from surfnav.utils.logging.logger import get_logger
from .labels import make_label, odom_errors, pose_deltas
from .maneuvers import all_maneuvers
from .models import CollectionConfig, CollectionResult, ManeuverPlan, Sample

logger = get_logger(__name__)

# Distance of the temporary goal used while the fallback planner is in control
_FALLBACK_GOAL_DISTANCE = 3.0


def patch_window(camera: CameraModel, patch_size: int) -> PixelWindow:
    """Horizontally centred, bottom-aligned n x n crop of the camera image."""
    if patch_size > camera.width or patch_size > camera.height:
        raise ValueError(f"patch size {patch_size} exceeds the {camera.width}x{camera.height} image")
    return PixelWindow(
        col0=(camera.width - patch_size) // 2,
        row0=camera.height - patch_size,
        cols=patch_size,
        rows=patch_size,
    )


def fallback_goal(state: RobotState, scan: RangeScan) -> tuple:
    """Odometry-frame point a few meters out along the freest beam."""
    bearing = float(scan.angles[int(np.argmax(scan.ranges))])
    x, y, theta = state.odom_pose
    return (
        x + _FALLBACK_GOAL_DISTANCE * math.cos(theta + bearing),
        y + _FALLBACK_GOAL_DISTANCE * math.sin(theta + bearing),
    )


def collect_dataset(
    world: WorldModel,
    plans: Iterable[ManeuverPlan],
    camera: CameraModel,
    config: CollectionConfig,
    params: Optional[PlannerParams] = None,
    patch_size: int = 50,
    seed: int = 0,
    first_sample_id: int = 0,
) -> CollectionResult:
    """
    Drive the robot through maneuver plans and record training samples.

    Every plan starts from the world's start pose. Each tick the simulator
    steps once and contributes dt * f_imu IMU readings. Every
    ``label_interval`` seconds, once a full ``label_window`` of history is
    available, a sample is emitted: the centre-bottom patch of the current
    camera view, the last n/2 commands and the label over the trailing
    window. While any scan beam is shorter than ``d_safe`` the baseline DWA
    drives toward a short goal along the freest beam instead of the plan.

    Args:
        world: World to collect in
        plans: Maneuver plans, executed in order
        camera: Camera model
        config: Collection rates and thresholds
        params: Planner parameters for the fallback planner and footprint
        patch_size: Patch side n
        seed: Noise seed
        first_sample_id: Id given to the first emitted sample

    Returns:
        CollectionResult; ``aborted`` with a diagnostic when the robot got stuck
    """
    params = params or PlannerParams()
    plans = list(plans)
    result = CollectionResult()
    fallback = BaselineDWAPlanner(params)
    window = patch_window(camera, patch_size)

    dt = config.dt
    samples_per_tick = max(1, int(round(config.f_imu * dt)))
    window_ticks = max(1, int(round(config.label_window / dt)))
    label_every = max(1, int(round(config.label_interval / dt)))
    history_len = patch_size // 2
    next_id = first_sample_id

    for plan_index, plan in enumerate(plans):
        state = RobotState.at_start(world, seed=seed * 1000 + plan_index)
        velocities = deque([(0.0, 0.0)] * history_len, maxlen=history_len)
        imu = deque(maxlen=window_ticks)
        poses = deque([(state.true_pose, state.odom_pose)], maxlen=window_ticks + 1)
        ticks = 0

        for v_plan, w_plan, hold in plan.commands:
            for _ in range(max(1, int(round(hold / dt)))):
                scan = sense_obstacles(world, state.true_pose, params.n_beams, params.max_range)
                cmd = (v_plan, w_plan)
                if float(np.min(scan.ranges)) < config.d_safe:
                    planned = fallback.plan(state, scan, fallback_goal(state, scan), localization=Localization.ODOMETRY)
                    cmd = planned.command
                    result.fallback_ticks += 1

                state = step(state, cmd, world, dt)
                ticks += 1
                velocities.append(cmd)
                result.commands.append((float(cmd[0]), float(cmd[1])))
                imu.append(read_imu(state, world, config.f_imu, samples_per_tick / config.f_imu))
                poses.append((state.true_pose, state.odom_pose))
                result.min_clearance = min(
                    result.min_clearance, world.clearance(state.true_pose[0], state.true_pose[1])
                )

                if state.stuck_time > world.physics.stuck_time:
                    message = (
                        f"robot stuck at ({state.true_pose[0]:.2f}, {state.true_pose[1]:.2f}) "
                        f"during {plan.kind.value}/{plan.speed_band.value}; "
                        f"aborting with {len(result.samples)} samples"
                    )
                    logger.warning(message)
                    result.diagnostics.append(message)
                    result.aborted = True
                    return result

                if ticks >= window_ticks and ticks % label_every == 0:
                    sample = _emit_sample(world, state, camera, window, velocities, imu, poses, config, next_id, seed)
                    result.samples.append(sample)
                    next_id += 1

    logger.info(f"collected {len(result.samples)} samples in {world.name} ({result.fallback_ticks} fallback ticks)")
    return result


def _emit_sample(world, state, camera, window, velocities, imu, poses, config, sample_id, seed) -> Sample:
    imu_window = np.concatenate(list(imu), axis=1)
    (true_start, odom_start), (true_end, odom_end) = poses[0], poses[-1]
    deltas = pose_deltas(true_start, true_end, odom_start, odom_end)
    d_error, theta_error = odom_errors(*deltas)
    label = make_label(imu_window, deltas, config.variance_mode)
    patch = render_camera(world, state.true_pose, camera, window)
    return Sample(
        sample_id=sample_id,
        patch=patch,
        vel_hist=np.array(velocities, dtype=float).T,
        label=label,
        surface_id=surface_at(world, state.true_pose[0], state.true_pose[1]).id,
        seed=seed,
        d_error_signed=float(d_error),
        theta_error_signed=float(theta_error),
    )


def surface_world(
    surface_name: str, config: CollectionConfig, seed: int, physics: Optional[PhysicsParams] = None
) -> WorldModel:
    """Obstacle-free single-surface world with the robot at its centre."""
    spec = library_surfaces([surface_name])[0]
    width, height = config.extent
    scenario = ScenarioConfig(
        name=f"collect-{surface_name}",
        extent=(width, height),
        surfaces=[spec],
        background=spec.id,
        start=(width / 2.0, height / 2.0, 0.0),
        goal=(width / 2.0, height / 2.0),
        physics=physics or PhysicsParams(),
    )
    return gen_world(scenario, seed)


def collect_surfaces(
    camera: CameraModel,
    config: CollectionConfig,
    params: Optional[PlannerParams] = None,
    patch_size: int = 50,
    seed: int = 0,
    world: Optional[WorldModel] = None,
    physics: Optional[PhysicsParams] = None,
) -> List[CollectionResult]:
    """
    Run every configured maneuver plan, either once per surface on its own
    single-surface world or once on ``world``.

    Returns:
        One CollectionResult per world visited
    """
    params = params or PlannerParams()
    plans = all_maneuvers(seed, params.v_max, params.w_max, config.maneuver_duration, config.kinds, config.bands)
    if not plans:
        raise ConfigurationError("no maneuver plans configured: collection kinds and speed bands must not be empty")

    if world is not None or not config.per_surface:
        if world is None:
            raise ValueError("a world is required when per-surface collection is disabled")
        return [collect_dataset(world, plans, camera, config, params, patch_size, seed)]

    results = []
    next_id = 0
    for name in config.surfaces:
        surface_result = collect_dataset(
            surface_world(name, config, seed, physics), plans, camera, config, params, patch_size, seed, next_id
        )
        surface_result.surface_id = library_surfaces([name])[0].id
        next_id += len(surface_result.samples)
        results.append(surface_result)
    return results
