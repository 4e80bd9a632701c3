"""
Tests for the command-line surface: exit codes and written artifacts.
"""
import csv

import numpy as np
import pytest
import simplejson as json

from main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from surfnav.config.run_config import EFFECTIVE_CONFIG_NAME, load_run_config
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.features import IMAGE_FEATURES, VELOCITY_FEATURES
from surfnav.services.predictor.implementation import TwoStreamRegressor
from surfnav.services.predictor.storage import save_model
from surfnav.utils.helpers.image_io import read_netpbm, write_pgm16, write_ppm

SHORT_TRIALS = "evaluation:\n  t_max: 30.0\n"
SMALL_COLLECTION = (
    "camera: {width: 160, height: 120, fx: 100.0, fy: 100.0, cx: 80.0, cy: 60.0}\n"
    "sampling:\n  patch_size: 20\n"
    "training:\n  warmup: 64\n  final_epochs: 40\n"
    "collection:\n  surfaces: [concrete, grass]\n  maneuver_duration: 30.0\n  bands: [slow]\n"
)


@pytest.fixture
def short_config(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(SHORT_TRIALS, encoding="utf-8")
    return path


@pytest.fixture
def collect_config(tmp_path):
    path = tmp_path / "collect.yaml"
    path.write_text(SMALL_COLLECTION + "  kinds: [serpentine, random]\n", encoding="utf-8")
    return path


@pytest.fixture
def model_file(tmp_path, rng):
    model = TwoStreamRegressor(patch_size=20, seed=2)
    model.set_normalization(
        rng.normal(size=(20, IMAGE_FEATURES)), rng.normal(size=(20, VELOCITY_FEATURES)), rng.uniform(size=(20, 4))
    )
    return save_model(tmp_path / "model.bin", model, CostModel(weights=np.ones(4), c_ref=1.0))


class TestExitCodes:
    """Tests for the mapping of failures to exit codes."""

    def test_unknown_option_is_usage_error(self, tmp_path):
        assert main(["--output-dir", str(tmp_path), "run", "--bogus"]) == EXIT_USAGE

    def test_jobs_below_one_is_usage_error(self, tmp_path):
        assert main(["--jobs", "0", "--output-dir", str(tmp_path), "world"]) == EXIT_USAGE

    def test_missing_config_file_is_usage_error(self, tmp_path):
        assert main(["--config", str(tmp_path / "absent.yaml"), "world"]) == EXIT_USAGE

    def test_unknown_scenario_is_failure(self, tmp_path):
        assert main(["--output-dir", str(tmp_path), "world", "--scenario", "scenario-99"]) == EXIT_FAILURE

    def test_unknown_config_key_is_failure(self, tmp_path):
        config = tmp_path / "bad.yaml"
        config.write_text("planer:\n  v_max: 0.5\n", encoding="utf-8")

        assert main(["--config", str(config), "--output-dir", str(tmp_path / "out"), "world"]) == EXIT_FAILURE

    def test_surface_run_without_model_is_failure(self, tmp_path):
        code = main([
            "--output-dir", str(tmp_path / "out"),
            "run", "--scenario", "flat", "--model", str(tmp_path / "missing.bin"),
        ])

        assert code == EXIT_FAILURE

    def test_failure_is_written_to_run_log(self, tmp_path):
        code = main(["--output-dir", str(tmp_path / "out"), "train", "--dataset", str(tmp_path / "absent")])

        assert code == EXIT_FAILURE
        text = (tmp_path / "out" / "run.log").read_text(encoding="utf-8")
        assert "surfnav.main" in text
        assert "InsufficientDataError" in text


class TestWorldCommand:
    """Tests for `world`."""

    def test_writes_renders_and_description(self, tmp_path):
        code = main(["--output-dir", str(tmp_path), "--seed", "3", "world", "--scenario", "flat"])

        assert code == EXIT_OK
        top = read_netpbm(tmp_path / "world_top.ppm")
        assert top.shape == (200, 200, 3)
        camera = read_netpbm(tmp_path / "world_camera.ppm")
        assert camera.shape == (480, 640, 3)

        described = json.loads((tmp_path / "world.json").read_text(encoding="utf-8"))
        assert described["name"] == "flat"
        assert described["seed"] == 3
        assert described["goal"] == [7.0, 10.0]
        assert list(described["surface_cells"]) == ["1"]
        assert described["surface_names"] == {"1": "concrete"}
        assert described["obstacles"] == 0

    def test_scenario_file_with_library_names(self, tmp_path):
        scenario = tmp_path / "field.yaml"
        scenario.write_text(
            "name: field\n"
            "surfaces: [concrete, grass]\n"
            "regions:\n"
            "  - {surface: 5, shape: rect, bounds: [6.0, 6.0, 10.0, 14.0]}\n",
            encoding="utf-8",
        )

        code = main(["--output-dir", str(tmp_path / "out"), "world", "--scenario", str(scenario)])

        assert code == EXIT_OK
        described = json.loads((tmp_path / "out" / "world.json").read_text(encoding="utf-8"))
        assert described["surface_names"] == {"1": "concrete", "5": "grass"}

    def test_effective_config_reloads_identically(self, tmp_path, short_config):
        code = main(["--config", str(short_config), "--output-dir", str(tmp_path), "--seed", "8", "world"])

        assert code == EXIT_OK
        reloaded = load_run_config(tmp_path / EFFECTIVE_CONFIG_NAME)
        expected = load_run_config(
            short_config, {"seed": 8, "paths": {"output_dir": str(tmp_path)}}
        )
        assert reloaded == expected
        assert reloaded.evaluation.t_max == 30.0
        assert reloaded.training.seed == 8


class TestCollectCommand:
    """Tests for `collect`."""

    def test_writes_dataset_and_summary(self, tmp_path, collect_config):
        dataset = tmp_path / "data"

        code = main(["--config", str(collect_config), "--output-dir", str(tmp_path / "out"), "collect", "--dataset", str(dataset)])

        assert code == EXIT_OK
        rows = list(csv.DictReader((dataset / "index.csv").read_text(encoding="utf-8").splitlines()))
        assert rows
        assert {row["surface_id"] for row in rows} == {"1", "5"}
        summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
        assert summary["total_samples"] == len(rows)

    def test_rerun_writes_identical_index(self, tmp_path, collect_config):
        for name in ("a", "b"):
            args = ["--config", str(collect_config), "--output-dir", str(tmp_path / name / "out"), "--seed", "4"]
            assert main(args + ["collect", "--dataset", str(tmp_path / name / "data")]) == EXIT_OK

        assert (tmp_path / "a" / "data" / "index.csv").read_bytes() == (tmp_path / "b" / "data" / "index.csv").read_bytes()

    def test_empty_maneuver_list_is_failure(self, tmp_path):
        config = tmp_path / "run.yaml"
        config.write_text(SMALL_COLLECTION + "  kinds: []\n", encoding="utf-8")

        code = main(["--config", str(config), "--output-dir", str(tmp_path / "out"), "collect", "--dataset", str(tmp_path / "data")])

        assert code == EXIT_FAILURE
        assert not (tmp_path / "data" / "index.csv").exists()


class TestTrainCommand:
    """Tests for `train`."""

    def test_missing_dataset_is_failure(self, tmp_path):
        code = main([
            "--output-dir", str(tmp_path / "out"),
            "train", "--dataset", str(tmp_path / "absent"), "--model", str(tmp_path / "model.bin"),
        ])

        assert code == EXIT_FAILURE
        assert not (tmp_path / "model.bin").exists()

    def test_trains_on_collected_dataset(self, tmp_path, collect_config):
        # Arrange
        dataset = tmp_path / "data"
        assert main(["--config", str(collect_config), "--output-dir", str(tmp_path / "c"), "collect", "--dataset", str(dataset)]) == EXIT_OK
        model = tmp_path / "model.bin"

        # Act
        code = main([
            "--config", str(collect_config), "--output-dir", str(tmp_path / "t"),
            "train", "--dataset", str(dataset), "--model", str(model),
        ])

        # Assert
        assert code == EXIT_OK
        assert model.exists()
        curve = list(csv.DictReader((tmp_path / "t" / "loss_curve.csv").read_text(encoding="utf-8").splitlines()))
        assert curve
        assert all(float(row["train_loss"]) >= 0.0 and float(row["heldout_loss"]) >= 0.0 for row in curve)
        summary = json.loads((tmp_path / "t" / "summary.json").read_text(encoding="utf-8"))
        assert summary["final_heldout_loss"] < summary["initial_heldout_loss"]
        assert summary["loss_curve"] == "loss_curve.csv"


class TestRunCommand:
    """Tests for `run`."""

    def test_baseline_run_on_flat_ground(self, tmp_path, short_config):
        code = main([
            "--config", str(short_config), "--output-dir", str(tmp_path),
            "run", "--scenario", "flat", "--planner", "dwa", "--debug",
        ])

        assert code == EXIT_OK
        for name in ("trajectory.csv", "overlay.ppm", "summary.json", EFFECTIVE_CONFIG_NAME, "planner_debug.jsonl"):
            assert (tmp_path / name).exists(), name

        summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert summary["outcome"] == "reached"
        assert summary["planner"] == "dwa"
        assert summary["window_violations"] == 0
        assert summary["min_clearance"] is None
        assert summary["norm_length"] < 1.2

    def test_rerun_writes_identical_outputs(self, tmp_path, short_config):
        args = ["run", "--scenario", "flat", "--planner", "dwa"]
        assert main(["--config", str(short_config), "--output-dir", str(tmp_path / "a")] + args) == EXIT_OK
        assert main(["--config", str(short_config), "--output-dir", str(tmp_path / "b")] + args) == EXIT_OK

        for name in ("trajectory.csv", "overlay.ppm", "summary.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes(), name


class TestCostmapCommand:
    """Tests for `costmap`."""

    def test_writes_costmap_and_sidecar(self, tmp_path, model_file):
        image = tmp_path / "ground.ppm"
        write_ppm(image, np.full((100, 120, 3), 90, dtype=np.uint8))
        out = tmp_path / "out"

        code = main(["--output-dir", str(out), "costmap", str(image), "--model", str(model_file)])

        assert code == EXIT_OK
        costmap = read_netpbm(out / "ground.pgm")
        assert costmap.shape == (100, 120)
        assert (out / "ground_patches.jsonl").exists()
        summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
        assert summary["mode"] == "hierarchical"
        assert summary["patch_count"] <= summary["uniform_patch_count"]

    def test_uniform_flag(self, tmp_path, model_file):
        image = tmp_path / "ground.ppm"
        write_ppm(image, np.full((100, 120, 3), 90, dtype=np.uint8))
        out = tmp_path / "out"

        code = main(["--output-dir", str(out), "costmap", str(image), "--model", str(model_file), "--uniform"])

        assert code == EXIT_OK
        summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
        assert summary["mode"] == "uniform"
        assert summary["patch_count"] == summary["uniform_patch_count"] == 30

    def test_corrupt_image_is_failure(self, tmp_path, model_file):
        image = tmp_path / "broken.ppm"
        image.write_bytes(b"P6\n10 10\n255\n\x00\x01")

        code = main(["--output-dir", str(tmp_path / "out"), "costmap", str(image), "--model", str(model_file)])

        assert code == EXIT_FAILURE

    def test_grayscale_image_is_failure(self, tmp_path, model_file):
        image = tmp_path / "gray.pgm"
        write_pgm16(image, np.full((40, 40), 1000))

        code = main(["--output-dir", str(tmp_path / "out"), "costmap", str(image), "--model", str(model_file)])

        assert code == EXIT_FAILURE


class TestEvalCommand:
    """Tests for `eval`."""

    def test_baseline_only_suite(self, tmp_path, short_config):
        code = main([
            "--config", str(short_config), "--output-dir", str(tmp_path),
            "eval", "--scenario", "flat", "--planner", "dwa", "--trials", "1",
        ])

        assert code == EXIT_OK
        for name in ("trials.csv", "aggregate.csv", "table.txt", "overlay_flat.ppm", "summary.json"):
            assert (tmp_path / name).exists(), name
        summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert summary["planners"] == ["dwa"]
        assert summary["rows"][0]["success_rate"] == 1.0

    def test_zero_trials_is_usage_error(self, tmp_path):
        code = main(["--output-dir", str(tmp_path), "eval", "--scenario", "flat", "--planner", "dwa", "--trials", "0"])

        assert code == EXIT_USAGE
