"""
Factory for creating local planner instances.
"""
from typing import Optional

from surfnav.services.world.models import CameraModel
from surfnav.utils.constants.enums import PlannerKind
from .interface import LocalPlanner
from .implementation import BaselineDWAPlanner, SurfaceAwarePlanner
from .params import PlannerParams


class PlannerFactory:
    """
    Factory for creating local planner instances.
    """

    @staticmethod
    def create_planner(kind: PlannerKind, params: PlannerParams, camera: Optional[CameraModel] = None) -> LocalPlanner:
        """
        Create a planner.

        Args:
            kind: ``surface`` or ``dwa``
            params: Planner parameters
            camera: Camera model, required by the surface-aware planner

        Returns:
            Local planner instance
        """
        kind = PlannerKind(kind)
        if kind == PlannerKind.DWA:
            return BaselineDWAPlanner(params)
        if camera is None:
            raise ValueError("the surface-aware planner needs a camera model")
        return SurfaceAwarePlanner(params, camera)
