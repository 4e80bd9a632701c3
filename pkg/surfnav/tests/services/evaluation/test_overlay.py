"""
Tests for trajectory overlays.
"""
import csv

import numpy as np

from surfnav.services.evaluation.overlay import (
    GOAL_COLOR,
    SPEED_BAND_COLORS,
    TRAJECTORY_COLUMNS,
    render_overlay,
    speed_color,
    surface_costs,
    write_overlay,
    write_trajectory_csv,
)
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.features import IMAGE_FEATURES, VELOCITY_FEATURES
from surfnav.services.predictor.implementation import TwoStreamRegressor
from surfnav.services.evaluation.suite import get_scenario
from surfnav.services.world.generator import gen_world
from surfnav.utils.helpers.image_io import read_netpbm
from .test_metrics import straight_trial

RED, YELLOW, GREEN = SPEED_BAND_COLORS


class TestSpeedColor:
    """Tests for speed_color."""

    def test_bands(self):
        assert speed_color(0.0, 0.6) == RED
        assert speed_color(0.3, 0.6) == YELLOW
        assert speed_color(0.6, 0.6) == GREEN
        assert speed_color(0.9, 0.6) == GREEN


class TestRenderOverlay:
    """Tests for render_overlay."""

    def test_trajectory_and_markers(self):
        world = gen_world(get_scenario("flat"), 0)
        trial = straight_trial(v=0.6)
        image = render_overlay(world, [trial], v_max=0.6, pixels_per_meter=10.0)
        assert image.shape == (200, 200, 3)
        # point (2, 0) of the trial lands at column 20, bottom row
        assert tuple(image[199, 20]) == GREEN
        assert tuple(image[100, 70]) == GOAL_COLOR

    def test_cost_background(self, rng):
        model = TwoStreamRegressor(seed=1)
        model.set_normalization(
            rng.uniform(size=(20, IMAGE_FEATURES)), rng.uniform(size=(20, VELOCITY_FEATURES)), rng.uniform(size=(20, 4))
        )
        cost_model = CostModel(weights=np.ones(4), c_ref=1.0)
        world = gen_world(get_scenario("scenario-1"), 0)

        costs = surface_costs(world, model, cost_model, patch_size=20)
        image = render_overlay(world, [], v_max=0.6, pixels_per_meter=5.0, model=model, cost_model=cost_model, patch_size=20)

        assert sorted(costs) == sorted(world.surfaces)
        assert all(0.0 <= c <= np.pi / 2.0 for c in costs.values())
        assert image.shape == (100, 100, 3)
        # gray background: equal channels away from the markers
        assert image[5, 5, 0] == image[5, 5, 1] == image[5, 5, 2]


class TestFiles:
    """Tests for overlay and trajectory files."""

    def test_overlay_file(self, tmp_path):
        image = np.zeros((4, 6, 3), dtype=np.uint8)
        path = write_overlay(tmp_path / "overlay.ppm", image)
        assert read_netpbm(path).shape == (4, 6, 3)

    def test_trajectory_csv(self, tmp_path):
        trial = straight_trial()
        rows = list(csv.reader(write_trajectory_csv(tmp_path / "trajectory.csv", trial).open()))
        assert rows[0] == TRAJECTORY_COLUMNS
        assert len(rows) == len(trial.trajectory) + 1
        assert float(rows[2][1]) == 1.0
