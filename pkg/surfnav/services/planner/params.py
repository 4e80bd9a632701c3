"""
Planner parameters.
"""
from pydantic import BaseModel, Field


class PlannerParams(BaseModel):
    """
    Velocity limits, rollout horizon and objective weights of the local planner.
    """
    v_max: float = Field(0.6, gt=0.0, description="Linear velocity limit (m/s)")
    w_max: float = Field(1.0, gt=0.0, description="Angular velocity limit (rad/s)")
    v_acc: float = Field(1.0, gt=0.0, description="Linear acceleration limit (m/s^2)")
    w_acc: float = Field(2.0, gt=0.0, description="Angular acceleration limit (rad/s^2)")
    dt: float = Field(0.1, gt=0.0, description="Control interval and rollout step (s)")
    s_num: int = Field(15, ge=2, description="Rollout steps")
    alpha: float = Field(2.4, gt=0.0, description="Heading weight")
    beta: float = Field(3.2, gt=0.0, description="Clearance weight")
    gamma: float = Field(0.1, gt=0.0, description="Velocity weight")
    delta: float = Field(50.0, gt=0.0, description="Surface-cost weight")
    n_v: int = Field(21, ge=1, description="Linear velocity samples over the window")
    n_w: int = Field(41, ge=1, description="Angular velocity samples over the window")
    robot_radius: float = Field(0.4, gt=0.0, description="Robot footprint radius (m)")
    d_clip: float = Field(3.0, gt=0.0, description="Clearance saturation for the dist term (m)")
    n_beams: int = Field(90, ge=1, description="Range scanner beams")
    max_range: float = Field(5.0, gt=0.0, description="Range scanner reach (m)")
