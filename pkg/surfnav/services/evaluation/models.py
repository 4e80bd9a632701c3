"""
Domain types for closed-loop evaluation.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from surfnav.services.world.models import ScenarioConfig
from surfnav.utils.constants.enums import Localization, PlannerKind, TrialOutcome


class EvaluationConfig(BaseModel):
    """Closed-loop trial settings."""
    goal_radius: float = Field(0.5, gt=0.0, description="Arrival radius (m)")
    t_max: float = Field(120.0, gt=0.0, description="Trial timeout (s)")
    trials: int = Field(20, ge=0, description="Trials per scenario and planner")
    costmap_period: int = Field(1, ge=1, description="Ticks between costmap rebuilds")
    localization: Localization = Field(
        Localization.GROUND_TRUTH, description="Pose the planner resolves the goal against"
    )
    planners: List[PlannerKind] = Field(default_factory=lambda: [PlannerKind.SURFACE, PlannerKind.DWA])
    scenarios: List[str] = Field(default_factory=lambda: ["scenario-1"])
    record_debug: bool = Field(False, description="Keep per-tick planner records")
    overlay_pixels_per_meter: float = Field(20.0, gt=0.0)


@dataclass(frozen=True)
class TrajectoryPoint:
    t: float
    true_pose: Tuple[float, float, float]
    odom_pose: Tuple[float, float, float]
    z: float
    v: float
    w: float
    surface_id: int


@dataclass
class TrialResult:
    """One closed-loop run and how it ended."""
    outcome: TrialOutcome
    planner: str
    scenario: str
    seed: int
    start: Tuple[float, float]
    goal: Tuple[float, float]
    dt: float
    trajectory: List[TrajectoryPoint] = field(default_factory=list)
    stop_ticks: int = 0
    window_violations: int = 0
    min_clearance: float = float("inf")
    false_goal_time: Optional[float] = None
    debug: List[dict] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.outcome == TrialOutcome.REACHED

    @property
    def duration(self) -> float:
        return self.trajectory[-1].t if self.trajectory else 0.0

    def commands(self) -> List[Tuple[float, float]]:
        """Commands executed after the initial point."""
        return [(p.v, p.w) for p in self.trajectory[1:]]


@dataclass
class SuiteEntry:
    name: str
    config: ScenarioConfig
    seeds: List[int]

    @property
    def trials(self) -> int:
        return len(self.seeds)


@dataclass
class ScenarioSuite:
    """Named scenarios with per-trial seeds."""
    entries: List[SuiteEntry] = field(default_factory=list)

    @property
    def total_trials(self) -> int:
        return sum(entry.trials for entry in self.entries)

    def names(self) -> List[str]:
        return [entry.name for entry in self.entries]

    def get(self, name: str) -> Optional[SuiteEntry]:
        return next((entry for entry in self.entries if entry.name == name), None)
