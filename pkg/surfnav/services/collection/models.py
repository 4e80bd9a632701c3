"""
Domain types for autonomous data collection and self-supervised labels.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from surfnav.utils.constants.enums import ManeuverKind, SpeedBand, VarianceMode
from surfnav.services.world.library import TRAINED_SURFACES


class CollectionConfig(BaseModel):
    """Rates and thresholds of the data-collection loop."""
    dt: float = Field(0.1, gt=0.0, description="Control/simulation tick (s)")
    f_imu: float = Field(100.0, gt=0.0, description="IMU sample rate (Hz)")
    label_interval: float = Field(0.5, gt=0.0, description="Seconds between emitted samples")
    label_window: float = Field(1.0, gt=0.0, description="Trailing window for IMU and odometry labels (s)")
    d_safe: float = Field(1.0, gt=0.0, description="Scan range that hands control to the fallback planner (m)")
    maneuver_duration: float = Field(60.0, gt=0.0, description="Length of each maneuver plan (s)")
    variance_mode: VarianceMode = VarianceMode.VARIANCE
    per_surface: bool = Field(True, description="Collect on one single-surface world per surface")
    surfaces: List[str] = Field(default_factory=lambda: list(TRAINED_SURFACES))
    extent: Tuple[float, float] = Field((60.0, 60.0), description="Size of per-surface collection worlds (m)")
    n_beams: int = Field(90, ge=1)
    max_range: float = Field(5.0, gt=0.0)
    kinds: List[ManeuverKind] = Field(default_factory=lambda: list(ManeuverKind))
    bands: List[SpeedBand] = Field(default_factory=lambda: list(SpeedBand))


@dataclass(frozen=True)
class ManeuverPlan:
    """A timed sequence of (v, w) commands."""
    kind: ManeuverKind
    speed_band: SpeedBand
    duration: float
    commands: Tuple[Tuple[float, float, float], ...]  # (v, w, hold seconds)

    def command_array(self) -> np.ndarray:
        return np.array(self.commands, dtype=float).reshape(-1, 3)


@dataclass
class Sample:
    """One training record."""
    sample_id: int
    patch: np.ndarray  # (n, n, 3) uint8
    vel_hist: np.ndarray  # (2, n/2): row 0 v, row 1 w
    label: np.ndarray  # (4,) [s_pc1, s_pc2, |d_error|, |theta_error|]
    surface_id: int
    seed: int = 0
    d_error_signed: float = 0.0
    theta_error_signed: float = 0.0


@dataclass
class CollectionResult:
    """Samples from one collection run plus what went wrong along the way."""
    samples: List[Sample] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)
    aborted: bool = False
    fallback_ticks: int = 0
    min_clearance: float = float("inf")
    commands: List[Tuple[float, float]] = field(default_factory=list)
    surface_id: Optional[int] = None
