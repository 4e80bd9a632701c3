"""
Summaries written next to each command's outputs as ``summary.json``.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class SurfaceCollectionSummary(BaseModel):
    surface_id: int = Field(..., description="Ground-truth surface id")
    samples: int = Field(..., ge=0, description="Samples emitted on this surface")
    aborted: bool = Field(False, description="A plan ended early (stuck robot)")
    fallback_ticks: int = Field(0, ge=0, description="Ticks driven by the obstacle fallback planner")
    mean_d_error: float = Field(0.0, description="Mean signed displacement error (m)")
    mean_theta_error: float = Field(0.0, description="Mean signed heading error (rad)")
    diagnostics: List[str] = Field(default_factory=list)


class CollectionSummary(BaseModel):
    dataset_dir: str
    total_samples: int = Field(..., ge=0)
    surfaces: List[SurfaceCollectionSummary] = Field(default_factory=list)


class TrainingSummary(BaseModel):
    model_file: str
    n_train: int = Field(..., ge=0)
    n_heldout: int = Field(..., ge=0)
    initial_heldout_loss: float
    final_heldout_loss: float
    c_ref: float = Field(..., gt=0.0, description="Raw-cost normalization constant")
    parameter_count: int = Field(..., ge=0)
    loss_curve: str = Field(..., description="CSV file with the loss curve")


class CostmapSummary(BaseModel):
    image: str
    mode: str
    resized_width: int
    resized_height: int
    patch_count: int = Field(..., ge=1)
    uniform_patch_count: int = Field(..., ge=1, description="Patches of the uniform n-grid on the same image")
    reduction: float = Field(..., description="1 - patch_count / uniform_patch_count")
    side_counts: Dict[int, int] = Field(default_factory=dict, description="Patch side -> count")
    mean_cost: float
    costmap_file: str
    patches_file: str


class TrialSummary(BaseModel):
    scenario: str
    planner: str
    seed: int
    outcome: str
    duration: float
    norm_length: Optional[float] = Field(None, description="Only defined for reached goals")
    vibration: float
    mean_velocity: float = Field(..., description="Time-weighted commanded linear velocity")
    stop_ticks: int
    window_violations: int
    min_clearance: Optional[float] = Field(None, description="Smallest obstacle clearance (None without obstacles)")
    false_goal_time: Optional[float] = Field(None, description="First time odometry alone was inside the goal radius")


class AggregateSummary(BaseModel):
    scenario: str
    planner: str
    trials: int
    success_rate: float
    norm_length: Optional[float] = None
    vibration: float
    mean_velocity: float


class EvaluationSummary(BaseModel):
    scenarios: List[str]
    planners: List[str]
    trials_per_cell: int
    rows: List[AggregateSummary] = Field(default_factory=list)
