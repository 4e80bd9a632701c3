"""
Interface for local planners.
"""
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from surfnav.services.costmap.models import SurfaceCostMap
from surfnav.services.world.models import RangeScan, RobotState
from surfnav.utils.constants.enums import Localization
from .models import PlanResult
from .params import PlannerParams


class LocalPlanner(ABC):
    """
    Interface for velocity-space local planners.
    """

    def __init__(self, params: PlannerParams):
        self.params = params

    @property
    @abstractmethod
    def kind(self) -> str:
        """Planner identifier used in results and tables."""
        pass

    @abstractmethod
    def plan(
        self,
        state: RobotState,
        scan: RangeScan,
        goal: Tuple[float, float],
        costmap: Optional[SurfaceCostMap] = None,
        localization: Localization = Localization.GROUND_TRUTH,
    ) -> PlanResult:
        """
        Choose the next (v, w) command.

        Args:
            state: Current robot state
            scan: Range scan in the robot frame
            goal: Goal (x, y) in the world frame
            costmap: Surface costmap of the current frame, if any
            localization: Pose of ``state`` the goal is resolved against

        Returns:
            PlanResult; ``stopped`` is set when no admissible command exists
        """
        pass
