"""
Tests for rollouts, surface cost and acceleration limits.
"""
import math

import numpy as np
import pytest

from surfnav.services.costmap.models import SurfaceCostMap
from surfnav.services.planner.params import PlannerParams
from surfnav.services.planner.trajectory import (
    accel_limits,
    point_costs,
    rollout,
    rollout_grid,
    second_half_cost,
    surface_cost,
)
from surfnav.services.world.camera import project_to_pixels
from surfnav.services.world.models import CameraModel

PARAMS = PlannerParams()
CAMERA = CameraModel()


class TestRollout:
    """Tests for rollout."""

    def test_point_count(self):
        assert rollout(0.3, 0.2, PARAMS).shape == (PARAMS.s_num + 1, 2)

    def test_straight(self):
        assert rollout(0.6, 0.0, PARAMS)[10].tolist() == pytest.approx([0.6, 0.0])

    def test_extrapolation_formula(self):
        # x = v cos(w t) t, y = v sin(w t) t at t = 0.5
        assert rollout(0.5, math.pi, PARAMS)[5].tolist() == pytest.approx([0.0, 0.25], abs=1e-12)

    def test_standing_still(self):
        assert np.all(rollout(0.0, 0.7, PARAMS) == 0.0)

    def test_grid_matches_single(self):
        grid = rollout_grid(np.array([0.1, 0.4]), np.array([-0.5, 0.3]), PARAMS)
        assert grid.shape == (2, PARAMS.s_num + 1, 2)
        assert grid[1] == pytest.approx(rollout(0.4, 0.3, PARAMS), abs=1e-15)


class TestSurfaceCost:
    """Tests for surface_cost and second_half_cost."""

    def test_uniform_map(self):
        costmap = SurfaceCostMap.constant(CAMERA.width, CAMERA.height, 0.1)
        assert surface_cost(rollout(0.4, 0.2, PARAMS), costmap, CAMERA) == pytest.approx(1.6)

    def test_zero_map(self):
        costmap = SurfaceCostMap.constant(CAMERA.width, CAMERA.height, 0.0)
        assert surface_cost(rollout(0.4, 0.2, PARAMS), costmap, CAMERA) == 0.0

    def test_two_band_map_matches_pixel_lookup(self):
        values = np.zeros((CAMERA.height, CAMERA.width))
        values[: CAMERA.height // 2] = math.pi / 2.0
        costmap = SurfaceCostMap.from_raster(values)
        points = rollout(0.6, 0.0, PARAMS.model_copy(update={"dt": 0.5}))

        cols, rows = project_to_pixels(points, CAMERA).indices()
        expected = sum(values[r, c] for r, c in zip(rows, cols))
        assert surface_cost(points, costmap, CAMERA) == pytest.approx(expected, rel=1e-12)

    def test_off_image_points_read_the_border(self):
        values = np.full((CAMERA.height, CAMERA.width), 0.2)
        values[-1, :] = 1.0
        costmap = SurfaceCostMap.from_raster(values)
        behind = np.array([[-1.0, 0.0], [-2.0, 0.5]])
        assert point_costs(behind, costmap, CAMERA).tolist() == [1.0, 1.0]

    def test_second_half_of_uniform_map(self):
        costmap = SurfaceCostMap.constant(CAMERA.width, CAMERA.height, 0.7)
        assert second_half_cost((0.5, 0.1), costmap, CAMERA, PARAMS) == pytest.approx(0.7)

    def test_second_half_uses_trailing_indices(self, rng):
        costmap = SurfaceCostMap.from_raster(rng.uniform(0.0, math.pi / 2.0, size=(CAMERA.height, CAMERA.width)))
        points = rollout(0.6, 0.3, PARAMS)
        costs = point_costs(points, costmap, CAMERA)
        # s_num = 15: indices 8..15
        assert second_half_cost((0.6, 0.3), costmap, CAMERA, PARAMS) == pytest.approx(np.mean(costs[8:]))


class TestAccelLimits:
    """Tests for cost-gated acceleration limits."""

    def test_free_surface_keeps_full_limits(self):
        assert accel_limits(0.0, PARAMS) == (PARAMS.v_acc, PARAMS.w_acc)

    def test_worst_surface_blocks_acceleration(self):
        v_lim, w_lim = accel_limits(math.pi / 2.0, PARAMS)
        assert v_lim == pytest.approx(0.0, abs=1e-12)
        assert w_lim == pytest.approx(0.0, abs=1e-12)

    def test_third_turn_halves_limits(self):
        v_lim, _ = accel_limits(math.pi / 3.0, PARAMS)
        assert v_lim == pytest.approx(0.5 * PARAMS.v_acc, abs=1e-12)

    def test_scale_never_negative(self):
        assert accel_limits(3.0, PARAMS) == (0.0, 0.0)
