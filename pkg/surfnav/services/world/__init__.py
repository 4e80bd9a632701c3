"""
World simulator: procedural worlds, robot kinematics with slip, and sensors.
"""
from .models import (
    CameraModel,
    Obstacle,
    PhysicsParams,
    PixelWindow,
    ProjectedPixels,
    RangeScan,
    Region,
    RobotState,
    ScenarioConfig,
    SurfaceSpec,
    TextureSpec,
    WorldModel,
)
from .generator import gen_world, surface_at, surface_ids_at, cell_index
from .camera import project_to_pixels, render_camera, render_top_down
from .robot import step
from .sensors import read_imu, sense_obstacles

__all__ = [
    "CameraModel",
    "Obstacle",
    "PhysicsParams",
    "PixelWindow",
    "ProjectedPixels",
    "RangeScan",
    "Region",
    "RobotState",
    "ScenarioConfig",
    "SurfaceSpec",
    "TextureSpec",
    "WorldModel",
    "gen_world",
    "surface_at",
    "surface_ids_at",
    "cell_index",
    "project_to_pixels",
    "render_camera",
    "render_top_down",
    "step",
    "read_imu",
    "sense_obstacles",
]
