"""
Tests for the simulated IMU and range scanner.
"""
import math

import numpy as np
import pytest

from surfnav.services.world.generator import gen_world
from surfnav.services.world.models import Obstacle, RobotState
from surfnav.services.world.sensors import read_imu, sense_obstacles
from surfnav.tests.conftest import flat_surface, single_surface_scenario


def moving_state(world, v_true: float, w_true: float = 0.0) -> RobotState:
    return RobotState.at_start(world, seed=4).evolve(v_true=v_true, w_true=w_true, v_curr=v_true, tick=3)


class TestReadImu:
    """Tests for read_imu."""

    def test_shape(self):
        world = gen_world(single_surface_scenario(flat_surface(1, bumpiness=0.01)), 0)
        assert read_imu(moving_state(world, 0.4), world, 100.0, 1.0).shape == (6, 100)

    def test_smooth_surface_gives_clean_channels(self):
        world = gen_world(single_surface_scenario(flat_surface(1, bumpiness=0.0)), 0)
        readings = read_imu(moving_state(world, 0.5, 0.3), world, 100.0, 1.0)
        assert np.all(readings[:5] == 0.0)
        assert np.all(readings[5] == 0.3)

    def test_faster_motion_vibrates_more(self):
        world = gen_world(single_surface_scenario(flat_surface(1, bumpiness=0.01)), 0)
        slow = read_imu(moving_state(world, 0.3), world, 100.0, 10.0)
        fast = read_imu(moving_state(world, 0.6), world, 100.0, 10.0)
        assert np.var(fast[2], ddof=1) > np.var(slow[2], ddof=1)

    def test_variance_scales_with_bumpiness_squared(self):
        grass = gen_world(single_surface_scenario(flat_surface(1, bumpiness=0.02)), 0)
        concrete = gen_world(single_surface_scenario(flat_surface(1, bumpiness=0.002)), 0)
        high = read_imu(moving_state(grass, 0.4), grass, 1000.0, 20.0)
        low = read_imu(moving_state(concrete, 0.4), concrete, 1000.0, 20.0)
        assert np.var(high[2], ddof=1) / np.var(low[2], ddof=1) == pytest.approx(100.0, rel=0.05)

    def test_window_must_be_positive(self):
        world = gen_world(single_surface_scenario(flat_surface(1)), 0)
        with pytest.raises(ValueError):
            read_imu(moving_state(world, 0.1), world, 100.0, 0.0)


class TestSenseObstacles:
    """Tests for sense_obstacles."""

    def test_empty_world_reports_max_range(self):
        world = gen_world(single_surface_scenario(flat_surface(1)), 0)
        scan = sense_obstacles(world, (5.0, 10.0, 0.0), 90, 5.0)
        assert np.all(scan.ranges == 5.0)
        assert scan.obstacle_points().shape == (0, 2)

    def test_circle_dead_ahead(self):
        config = single_surface_scenario(flat_surface(1)).model_copy(update={
            "obstacles": [Obstacle(x=7.0, y=10.0, radius=0.5)],
        })
        world = gen_world(config, 0)
        scan = sense_obstacles(world, (5.0, 10.0, 0.0), 90, 5.0)
        forward = int(np.argmin(np.abs(scan.angles)))
        assert scan.ranges[forward] == pytest.approx(1.5, abs=1e-9)

    def test_circle_behind_forward_fan(self):
        config = single_surface_scenario(flat_surface(1)).model_copy(update={
            "obstacles": [Obstacle(x=2.0, y=10.0, radius=0.5)],
        })
        world = gen_world(config, 0)
        scan = sense_obstacles(world, (5.0, 10.0, 0.0), 31, 5.0, fov=math.pi / 2.0)
        assert np.all(scan.ranges == 5.0)

    def test_heading_rotates_the_scan(self):
        config = single_surface_scenario(flat_surface(1)).model_copy(update={
            "obstacles": [Obstacle(x=5.0, y=12.0, radius=0.5)],
        })
        world = gen_world(config, 0)
        scan = sense_obstacles(world, (5.0, 10.0, math.pi / 2.0), 90, 5.0)
        forward = int(np.argmin(np.abs(scan.angles)))
        assert scan.ranges[forward] == pytest.approx(1.5, abs=1e-9)
