"""
Surface-aware and baseline dynamic-window planners.
"""
import math
from typing import Optional, Tuple

import numpy as np

from surfnav.services.costmap.models import SurfaceCostMap
from surfnav.services.world.models import CameraModel, RangeScan, RobotState
from surfnav.utils.constants.enums import Localization, PlannerKind
from surfnav.utils.helpers.geometry import to_robot_frame, wrap_angle
from surfnav.utils.logging.logger import get_logger
from .interface import LocalPlanner
from .models import PlanResult, SearchSpace
from .params import PlannerParams
from .search_space import build_search_space

logger = get_logger(__name__)


def _normalize(term: np.ndarray) -> np.ndarray:
    peak = float(np.max(term)) if term.size else 0.0
    return term / peak if peak > 0.0 else term


def objective_terms(space: SearchSpace, goal_robot: Tuple[float, float], params: PlannerParams):
    """
    head, dist and vel over V'_r, each divided by its maximum across V'_r.

    head = 1 - |heading error to the goal at the rollout end| / pi,
    dist = min(clearance, d_clip) / d_clip, vel = v / v_max.
    """
    idx = space.feasible
    end = space.rollouts[idx, -1, :]
    t_end = params.s_num * params.dt
    end_heading = space.ws[idx] * t_end
    bearing = np.arctan2(goal_robot[1] - end[:, 1], goal_robot[0] - end[:, 0])
    head = 1.0 - np.abs(wrap_angle(bearing - end_heading)) / math.pi
    dist = np.minimum(space.clearance[idx], params.d_clip) / params.d_clip
    vel = space.vs[idx] / params.v_max
    return _normalize(head), _normalize(dist), _normalize(vel)


def g1_scores(head: np.ndarray, dist: np.ndarray, vel: np.ndarray, params: PlannerParams) -> np.ndarray:
    return params.alpha * head + params.beta * dist + params.gamma * vel


def g2_scores(g1: np.ndarray, sur: np.ndarray, params: PlannerParams) -> np.ndarray:
    return g1 - params.delta * sur


def choose_G1(space: SearchSpace, goal_robot: Tuple[float, float], params: PlannerParams) -> PlanResult:
    """
    Maximize alpha head + beta dist + gamma vel over V'_r.

    Ties go to higher v, then smaller |w|.
    """
    idx = space.feasible
    if idx.size == 0:
        return _stop(space)
    head, dist, vel = objective_terms(space, goal_robot, params)
    g1 = g1_scores(head, dist, vel, params)
    order = np.lexsort((np.abs(space.ws[idx]), -space.vs[idx], -g1))
    return _result(space, idx, order[0], head, dist, vel, g1)


def choose_G2(space: SearchSpace, goal_robot: Tuple[float, float], params: PlannerParams) -> PlanResult:
    """
    Maximize G1 - delta sur over V'_r.

    Ties go to smaller sur, then higher v, then smaller |w|. With sur as the
    first tie-break, sur(argmax G2) <= sur(argmax G1) holds exactly.
    """
    idx = space.feasible
    if idx.size == 0:
        return _stop(space)
    head, dist, vel = objective_terms(space, goal_robot, params)
    sur = space.sur[idx]
    g2 = g2_scores(g1_scores(head, dist, vel, params), sur, params)
    order = np.lexsort((np.abs(space.ws[idx]), -space.vs[idx], sur, -g2))
    return _result(space, idx, order[0], head, dist, vel, g2)


def _result(space, idx, best, head, dist, vel, objective) -> PlanResult:
    i = int(idx[best])
    return PlanResult(
        v=float(space.vs[i]),
        w=float(space.ws[i]),
        stopped=False,
        space=space,
        index=i,
        head=head,
        dist=dist,
        vel=vel,
        objective=objective,
    )


def _stop(space: SearchSpace) -> PlanResult:
    logger.debug("no admissible velocity in the dynamic window, stopping")
    return PlanResult(v=0.0, w=0.0, stopped=True, space=space)


class BaselineDWAPlanner(LocalPlanner):
    """
    Classic dynamic window approach: unmodulated limits, objective G1.
    """

    @property
    def kind(self) -> str:
        return PlannerKind.DWA.value

    def plan(
        self,
        state: RobotState,
        scan: RangeScan,
        goal: Tuple[float, float],
        costmap: Optional[SurfaceCostMap] = None,
        localization: Localization = Localization.GROUND_TRUTH,
    ) -> PlanResult:
        space = build_search_space(state, scan, self.params, modulated=False)
        goal_robot = to_robot_frame(state.pose(localization), goal[0], goal[1])
        return choose_G1(space, goal_robot, self.params)


class SurfaceAwarePlanner(LocalPlanner):
    """
    Dynamic window with surface-cost-gated accelerations and objective G2.

    Without a costmap it degrades to the baseline behaviour.
    """

    def __init__(self, params: PlannerParams, camera: CameraModel):
        super().__init__(params)
        self.camera = camera

    @property
    def kind(self) -> str:
        return PlannerKind.SURFACE.value

    def plan(
        self,
        state: RobotState,
        scan: RangeScan,
        goal: Tuple[float, float],
        costmap: Optional[SurfaceCostMap] = None,
        localization: Localization = Localization.GROUND_TRUTH,
    ) -> PlanResult:
        goal_robot = to_robot_frame(state.pose(localization), goal[0], goal[1])
        if costmap is None:
            logger.debug("surface planner called without a costmap, using unmodulated limits")
            space = build_search_space(state, scan, self.params, modulated=False)
            return choose_G1(space, goal_robot, self.params)
        space = build_search_space(state, scan, self.params, costmap=costmap, camera=self.camera, modulated=True)
        return choose_G2(space, goal_robot, self.params)


def debug_record(result: PlanResult, tick: int, include_candidates: bool = False) -> dict:
    """JSON-lines record describing one planning tick."""
    space = result.space
    record = {
        "tick": tick,
        "v": result.v,
        "w": result.w,
        "stopped": result.stopped,
        "tau": space.tau,
        "c_half": space.c_half,
        "window": list(space.window),
        "grid_size": len(space),
        "admissible": int(space.admissible.sum()),
    }
    if result.index >= 0:
        record["sur"] = float(space.sur[result.index])
    if include_candidates and not result.stopped:
        record["candidates"] = [
            dict(c.to_dict(), objective=float(g)) for c, g in zip(result.candidates(), result.objective)
        ]
    return record
