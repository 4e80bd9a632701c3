"""
Domain types for the world simulator.

Scenario descriptions and physical parameters are pydantic models (they are
read from config files); runtime state carrying numpy arrays uses dataclasses.
"""
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from surfnav.utils.constants.enums import Localization, RegionShape


class TextureSpec(BaseModel):
    """Procedural texture of a surface."""
    color: Tuple[int, int, int] = Field(..., description="Base RGB color")
    noise_amplitude: float = Field(0.0, ge=0.0, description="Peak value-noise offset in intensity units")
    frequency: float = Field(4.0, gt=0.0, description="Noise lattice cells per meter")

    @field_validator("color")
    @classmethod
    def validate_color(cls, v):
        if any(c < 0 or c > 255 for c in v):
            raise ValueError("texture color channels must lie in [0, 255]")
        return v

    def shifted(self, delta: Tuple[int, int, int], noise_scale: float = 1.0) -> "TextureSpec":
        """Return a copy with a color offset (clipped) and scaled noise."""
        color = tuple(int(min(255, max(0, c + d))) for c, d in zip(self.color, delta))
        return self.model_copy(update={"color": color, "noise_amplitude": self.noise_amplitude * noise_scale})


class SurfaceSpec(BaseModel):
    """Hidden physical truth of one surface class."""
    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0, description="Small integer surface id")
    name: str = Field("surface", description="Human-readable name")
    slip_lin: float = Field(0.0, ge=0.0, le=1.0, description="Fraction of commanded v lost to slip")
    slip_ang: float = Field(0.0, ge=0.0, le=1.0, description="Fraction of commanded omega lost to slip")
    bumpiness: float = Field(0.0, ge=0.0, description="Vertical vibration std per m/s of speed (m)")
    deformability: float = Field(0.0, ge=0.0, le=1.0, description="Speed-dependent sinking severity")
    texture: TextureSpec


class PhysicsParams(BaseModel):
    """Constants of the robot-terrain interaction model."""
    stuck_slip: float = Field(0.9, ge=0.0, le=1.0, description="Effective slip at which the robot counts as stuck")
    stuck_time: float = Field(3.0, gt=0.0, description="Seconds of sustained stuck slip that end a trial")
    sink_reference_speed: float = Field(0.6, gt=0.0, description="Speed at which deformability acts fully")
    imu_accel_gain: float = Field(25.0, ge=0.0, description="Vertical acceleration std per meter of vibration std")
    imu_gyro_gain: float = Field(5.0, ge=0.0, description="Angular-rate noise std per meter of vibration std")
    lateral_factor: float = Field(0.3, ge=0.0, le=1.0, description="Horizontal/vertical acceleration noise ratio")


class CameraModel(BaseModel):
    """Pinhole camera rigidly mounted on the robot."""
    width: int = Field(640, gt=0)
    height: int = Field(480, gt=0)
    fx: float = Field(400.0, gt=0.0)
    fy: float = Field(400.0, gt=0.0)
    cx: float = Field(320.0)
    cy: float = Field(240.0)
    mount_height: float = Field(0.8, gt=0.0, description="Optical center height above ground (m)")
    pitch: float = Field(0.7, description="Downward tilt of the optical axis (rad)")
    forward_offset: float = Field(0.0, description="Optical center ahead of the robot center (m)")

    @model_validator(mode="after")
    def validate_geometry(self):
        if not (0.0 < self.cx < self.width and 0.0 < self.cy < self.height):
            raise ValueError("principal point must lie inside the image")
        if not (0.0 < self.pitch < math.pi / 2):
            raise ValueError("pitch must tilt the optical axis toward the ground (0 < pitch < pi/2)")
        return self

    def scaled(self, factor: float) -> "CameraModel":
        """Same optics at a different resolution."""
        return self.model_copy(update={
            "width": max(1, int(round(self.width * factor))),
            "height": max(1, int(round(self.height * factor))),
            "fx": self.fx * factor,
            "fy": self.fy * factor,
            "cx": self.cx * factor,
            "cy": self.cy * factor,
        })


class Region(BaseModel):
    """A painted surface region; later regions overwrite earlier ones."""
    surface: int = Field(..., description="Surface id painted inside the region")
    shape: RegionShape
    bounds: Optional[Tuple[float, float, float, float]] = Field(
        None, description="rect: (x0, y0, x1, y1) in meters"
    )
    center: Optional[Tuple[float, float]] = Field(None, description="circle/blob center (m)")
    radius: Optional[float] = Field(None, gt=0.0, description="circle/blob mean radius (m)")
    roughness: float = Field(0.3, ge=0.0, lt=1.0, description="blob radial perturbation (fraction of radius)")

    @model_validator(mode="after")
    def validate_shape(self):
        if self.shape == RegionShape.RECT and self.bounds is None:
            raise ValueError("rect regions need bounds")
        if self.shape in (RegionShape.CIRCLE, RegionShape.BLOB) and (self.center is None or self.radius is None):
            raise ValueError(f"{self.shape.value} regions need center and radius")
        return self


class Obstacle(BaseModel):
    """A circular obstacle."""
    x: float
    y: float
    radius: float = Field(..., gt=0.0)


class RandomBlobs(BaseModel):
    """Seeded random blob regions sprinkled over the background."""
    count: int = Field(0, ge=0)
    surfaces: List[int] = Field(default_factory=list, description="Surface ids drawn uniformly")
    radius_range: Tuple[float, float] = Field((1.0, 3.0))


class ScenarioConfig(BaseModel):
    """Everything needed to generate one world."""
    name: str = Field("scenario")
    extent: Tuple[float, float] = Field((20.0, 20.0), description="Width x height (m)")
    cell_size: float = Field(0.1, gt=0.0)
    surfaces: List[SurfaceSpec] = Field(..., min_length=1)
    background: Optional[int] = Field(None, description="Surface id filling unpainted cells (default: first)")
    regions: List[Region] = Field(default_factory=list)
    random_blobs: RandomBlobs = Field(default_factory=RandomBlobs)
    obstacles: List[Obstacle] = Field(default_factory=list)
    start: Tuple[float, float, float] = Field((1.0, 1.0, 0.0), description="(x, y, heading)")
    goal: Tuple[float, float] = Field((10.0, 10.0))
    camera: Optional[CameraModel] = None
    physics: PhysicsParams = Field(default_factory=PhysicsParams)
    trained_surfaces: List[int] = Field(default_factory=list, description="Ids the predictor saw in training")

    @model_validator(mode="after")
    def validate_references(self):
        ids = [s.id for s in self.surfaces]
        if len(set(ids)) != len(ids):
            raise ValueError("surface ids must be unique")
        known = set(ids)
        if self.background is not None and self.background not in known:
            raise ValueError(f"background surface {self.background} is not defined")
        for region in self.regions:
            if region.surface not in known:
                raise ValueError(f"region references unknown surface {region.surface}")
        for sid in self.random_blobs.surfaces:
            if sid not in known:
                raise ValueError(f"random blobs reference unknown surface {sid}")
        return self


@dataclass(frozen=True)
class WorldModel:
    """A generated world: surface raster, obstacles, start and goal."""
    name: str
    extent: Tuple[float, float]
    cell_size: float
    surface_grid: np.ndarray  # (ny, nx) of surface ids, grid[iy, ix]
    surfaces: dict  # id -> SurfaceSpec
    obstacles: Tuple[Obstacle, ...]
    start_pose: Tuple[float, float, float]
    goal: Tuple[float, float]
    seed: int
    physics: PhysicsParams = field(default_factory=PhysicsParams)
    camera: Optional[CameraModel] = None

    @property
    def shape(self) -> Tuple[int, int]:
        return self.surface_grid.shape

    def obstacle_array(self) -> np.ndarray:
        """Obstacles as an (m, 3) array of (x, y, radius)."""
        if not self.obstacles:
            return np.zeros((0, 3))
        return np.array([[o.x, o.y, o.radius] for o in self.obstacles], dtype=float)

    def clearance(self, x: float, y: float) -> float:
        """Distance from a point to the nearest obstacle boundary (inf without obstacles)."""
        obs = self.obstacle_array()
        if obs.shape[0] == 0:
            return math.inf
        return float(np.min(np.hypot(obs[:, 0] - x, obs[:, 1] - y) - obs[:, 2]))

    def contains(self, x: float, y: float) -> bool:
        return 0.0 <= x <= self.extent[0] and 0.0 <= y <= self.extent[1]


@dataclass(frozen=True)
class RobotState:
    """
    Simulated robot state.

    ``tick`` and ``seed`` make every noisy update a pure function of the state.
    """
    true_pose: Tuple[float, float, float]
    odom_pose: Tuple[float, float, float]
    z: float = 0.0
    v_curr: float = 0.0
    w_curr: float = 0.0
    v_true: float = 0.0
    w_true: float = 0.0
    stuck_time: float = 0.0
    t: float = 0.0
    tick: int = 0
    seed: int = 0

    @classmethod
    def at_start(cls, world: WorldModel, seed: Optional[int] = None) -> "RobotState":
        return cls(
            true_pose=tuple(float(c) for c in world.start_pose),
            odom_pose=tuple(float(c) for c in world.start_pose),
            seed=world.seed if seed is None else int(seed),
        )

    def pose(self, localization: Localization = Localization.GROUND_TRUTH) -> Tuple[float, float, float]:
        """Pose the navigation stack believes in under a localization source."""
        if Localization(localization) == Localization.ODOMETRY:
            return self.odom_pose
        return self.true_pose

    def evolve(self, **changes) -> "RobotState":
        return replace(self, **changes)


@dataclass(frozen=True)
class RangeScan:
    """Planar range scan in the robot frame."""
    angles: np.ndarray
    ranges: np.ndarray
    max_range: float

    def obstacle_points(self) -> np.ndarray:
        """Robot-frame (x, y) of every beam that hit something."""
        hit = self.ranges < self.max_range
        return np.stack(
            [self.ranges[hit] * np.cos(self.angles[hit]), self.ranges[hit] * np.sin(self.angles[hit])],
            axis=1,
        )


@dataclass(frozen=True)
class PixelWindow:
    """Sub-rectangle of the image (columns col0..col0+cols, rows row0..row0+rows)."""
    col0: int
    row0: int
    cols: int
    rows: int


@dataclass(frozen=True)
class ProjectedPixels:
    """Pixel coordinates of projected ground points plus clamp flags."""
    pixels: np.ndarray  # (m, 2) float (x_img, y_img)
    clamped: np.ndarray  # (m,) bool

    def indices(self) -> Tuple[np.ndarray, np.ndarray]:
        """Integer (col, row) for raster lookup."""
        return (
            np.rint(self.pixels[:, 0]).astype(int),
            np.rint(self.pixels[:, 1]).astype(int),
        )
