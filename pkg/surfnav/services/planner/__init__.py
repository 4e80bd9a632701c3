"""
Local planning: rollouts, dynamic-window search space and the G1/G2 objectives.
"""
from .params import PlannerParams
from .models import PlanResult, SearchSpace, VelocityCandidate
from .trajectory import accel_limits, rollout, rollout_grid, second_half_cost, surface_cost
from .search_space import build_search_space, contact_distance
from .interface import LocalPlanner
from .implementation import BaselineDWAPlanner, SurfaceAwarePlanner, choose_G1, choose_G2, debug_record
from .factory import PlannerFactory
