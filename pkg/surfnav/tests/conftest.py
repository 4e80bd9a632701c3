"""
Test configuration and shared fixtures.

This file contains pytest fixtures that can be shared across different test modules.
"""
import numpy as np
import pytest

from surfnav.services.world.models import CameraModel, ScenarioConfig, SurfaceSpec, TextureSpec


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: long closed-loop or statistical run (needs --run-slow)"
    )


def pytest_addoption(parser):
    """Add command-line options to pytest."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run slow acceptance tests"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --run-slow is specified."""
    if not config.getoption("--run-slow"):
        skip_slow = pytest.mark.skip(reason="need --run-slow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


def flat_surface(
    surface_id: int,
    color=(120, 120, 120),
    slip_lin: float = 0.0,
    slip_ang: float = 0.0,
    bumpiness: float = 0.0,
    deformability: float = 0.0,
    noise: float = 0.0,
) -> SurfaceSpec:
    """Surface with a noise-free (or lightly textured) uniform color."""
    return SurfaceSpec(
        id=surface_id,
        name=f"surface-{surface_id}",
        slip_lin=slip_lin,
        slip_ang=slip_ang,
        bumpiness=bumpiness,
        deformability=deformability,
        texture=TextureSpec(color=color, noise_amplitude=noise, frequency=4.0),
    )


def single_surface_scenario(spec: SurfaceSpec, extent=(20.0, 20.0), start=(5.0, 10.0, 0.0), goal=(15.0, 10.0)) -> ScenarioConfig:
    return ScenarioConfig(
        name="single",
        extent=extent,
        cell_size=0.5,
        surfaces=[spec],
        start=start,
        goal=goal,
    )


@pytest.fixture
def small_camera() -> CameraModel:
    """A quarter-resolution camera (160 x 120) with the default optics."""
    return CameraModel().scaled(0.25)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
