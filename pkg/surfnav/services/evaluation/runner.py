"""
Closed-loop navigation trials.
"""
import math
from collections import deque
from typing import Optional, Tuple

import numpy as np

from surfnav.services.costmap.builder import build_costmap
from surfnav.services.costmap.models import SamplingConfig
from surfnav.services.planner.factory import PlannerFactory
from surfnav.services.planner.implementation import debug_record
from surfnav.services.planner.params import PlannerParams
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.interface import SurfaceRegressor
from surfnav.services.world.camera import render_camera
from surfnav.services.world.generator import surface_at
from surfnav.services.world.models import CameraModel, RobotState, WorldModel
from surfnav.services.world.robot import step
from surfnav.services.world.sensors import sense_obstacles
from surfnav.utils.constants.enums import Localization, PlannerKind, TrialOutcome
from surfnav.utils.logging.logger import get_logger
from .models import EvaluationConfig, TrajectoryPoint, TrialResult

logger = get_logger(__name__)


def _point(state: RobotState, world: WorldModel) -> TrajectoryPoint:
    return TrajectoryPoint(
        t=state.t,
        true_pose=state.true_pose,
        odom_pose=state.odom_pose,
        z=state.z,
        v=state.v_curr,
        w=state.w_curr,
        surface_id=surface_at(world, state.true_pose[0], state.true_pose[1]).id,
    )


def _within(pose, goal: Tuple[float, float], radius: float) -> bool:
    return math.hypot(goal[0] - pose[0], goal[1] - pose[1]) <= radius


def _false_goal(state: RobotState, world: WorldModel, config: EvaluationConfig) -> bool:
    return _within(state.odom_pose, world.goal, config.goal_radius) and not _within(
        state.true_pose, world.goal, config.goal_radius
    )


def termination(state: RobotState, world: WorldModel, params: PlannerParams, config: EvaluationConfig) -> Optional[TrialOutcome]:
    """
    Outcome reached by a state, checked in the order collided, stuck,
    reached, false-goal, timeout.

    Wheel odometry inside the goal radius while the true pose is not is a
    false goal. It ends the trial only when the planner navigates on
    odometry (the robot believes it has arrived). Under ground-truth
    localization the trial goes on, and a timeout with odometry still
    inside the radius is reported as a false goal.
    """
    x, y, _ = state.true_pose
    if world.clearance(x, y) < params.robot_radius:
        return TrialOutcome.COLLIDED
    if state.stuck_time > world.physics.stuck_time:
        return TrialOutcome.STUCK
    if _within(state.true_pose, world.goal, config.goal_radius):
        return TrialOutcome.REACHED
    odom_arrived = _within(state.odom_pose, world.goal, config.goal_radius)
    if odom_arrived and config.localization == Localization.ODOMETRY:
        return TrialOutcome.FALSE_GOAL
    if state.t >= config.t_max - 1e-9:
        return TrialOutcome.FALSE_GOAL if odom_arrived else TrialOutcome.TIMEOUT
    return None


def run_trial(
    world: WorldModel,
    planner_kind: PlannerKind,
    model: Optional[SurfaceRegressor],
    cost_model: Optional[CostModel],
    params: PlannerParams,
    seed: int,
    camera: Optional[CameraModel] = None,
    config: Optional[EvaluationConfig] = None,
    sampling: Optional[SamplingConfig] = None,
    scenario: str = "",
) -> TrialResult:
    """
    Drive from the world's start toward its goal until a termination fires.

    Each tick the surface-aware planner refreshes its costmap every
    ``costmap_period`` ticks (render, then build_costmap with the current
    velocity history); both planners then scan, plan toward the goal as
    seen from the configured localization pose, and step the simulator.
    The first time odometry alone claims arrival is kept as
    ``false_goal_time``.

    Args:
        world: World to navigate
        planner_kind: ``surface`` or ``dwa``
        model: Trained regressor (ignored for dwa)
        cost_model: Cost normalization (ignored for dwa)
        params: Planner parameters
        seed: Trial seed
        camera: Camera model (defaults to the world's, then the default camera)
        config: Trial settings
        sampling: Costmap sampling settings
        scenario: Name recorded in the result

    Returns:
        TrialResult; every termination is a result, never an exception
    """
    planner_kind = PlannerKind(planner_kind)
    config = config or EvaluationConfig()
    sampling = sampling or SamplingConfig()
    camera = camera or world.camera or CameraModel()
    surface = planner_kind == PlannerKind.SURFACE
    if surface and (model is None or cost_model is None):
        raise ValueError("the surface-aware planner needs a trained model and cost model")
    planner = PlannerFactory.create_planner(planner_kind, params, camera)

    state = RobotState.at_start(world, seed=seed)
    history_len = sampling.patch_size // 2
    velocities = deque([(0.0, 0.0)] * history_len, maxlen=history_len)
    result = TrialResult(
        outcome=TrialOutcome.TIMEOUT,
        planner=planner_kind.value,
        scenario=scenario or world.name,
        seed=seed,
        start=(world.start_pose[0], world.start_pose[1]),
        goal=tuple(world.goal),
        dt=params.dt,
        trajectory=[_point(state, world)],
        min_clearance=world.clearance(state.true_pose[0], state.true_pose[1]),
    )

    costmap = None
    outcome = termination(state, world, params, config)
    while outcome is None:
        if surface and state.tick % config.costmap_period == 0:
            image = render_camera(world, state.true_pose, camera)
            costmap = build_costmap(image, np.array(velocities, dtype=float).T, model, cost_model, sampling)

        scan = sense_obstacles(world, state.true_pose, params.n_beams, params.max_range)
        plan = planner.plan(state, scan, world.goal, costmap, config.localization)
        if plan.stopped:
            result.stop_ticks += 1
        elif not plan.space.contains(plan.v, plan.w):
            result.window_violations += 1
        if config.record_debug:
            result.debug.append(debug_record(plan, state.tick))

        state = step(state, plan.command, world, params.dt)
        velocities.append(plan.command)
        result.trajectory.append(_point(state, world))
        result.min_clearance = min(result.min_clearance, world.clearance(state.true_pose[0], state.true_pose[1]))
        if result.false_goal_time is None and _false_goal(state, world, config):
            result.false_goal_time = state.t
        outcome = termination(state, world, params, config)

    result.outcome = outcome
    if result.false_goal_time is not None and outcome != TrialOutcome.FALSE_GOAL:
        logger.debug(f"odometry claimed the goal at {result.false_goal_time:.1f}s before the true pose")
    logger.info(
        f"{result.scenario} [{planner_kind.value}, seed {seed}]: {outcome.value} after {state.t:.1f}s"
    )
    return result
