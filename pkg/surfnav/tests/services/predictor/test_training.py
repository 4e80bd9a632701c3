"""
Tests for online training.
"""
import numpy as np
import pytest

from surfnav.exceptions import InsufficientDataError, TrainingDivergedError
from surfnav.services.collection.models import Sample
from surfnav.services.predictor.features import IMAGE_FEATURES, VELOCITY_FEATURES
from surfnav.services.predictor.implementation import TwoStreamRegressor
from surfnav.services.predictor.training import OnlineTrainer, TrainingConfig, train_on_features, train_online

FAST = TrainingConfig(warmup=64, round_size=32, epochs_per_round=2, final_epochs=20, seed=4)


def linear_problem(count: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    image = rng.normal(size=(count, IMAGE_FEATURES))
    vel = rng.normal(size=(count, VELOCITY_FEATURES))
    mixing = rng.normal(size=(IMAGE_FEATURES + VELOCITY_FEATURES, 4)) * 0.3
    labels = np.concatenate([image, vel], axis=1) @ mixing + 2.0
    return image, vel, labels


class TestOnlineTrainer:
    """Tests for the buffered training schedule."""

    def test_waits_for_warmup(self):
        trainer = OnlineTrainer(TwoStreamRegressor(), FAST)
        image, vel, labels = linear_problem(63)
        for row in zip(image, vel, labels):
            trainer.add(*row)
        assert not trainer.started
        with pytest.raises(InsufficientDataError):
            trainer.run_epochs(1)

    def test_starts_at_warmup(self):
        trainer = OnlineTrainer(TwoStreamRegressor(), FAST)
        image, vel, labels = linear_problem(64)
        for row in zip(image, vel, labels):
            trainer.add(*row)
        assert trainer.started
        assert trainer.model.is_trained
        assert len(trainer.curve) == FAST.epochs_per_round

    def test_short_stream_raises(self):
        image, vel, labels = linear_problem(10)
        with pytest.raises(InsufficientDataError):
            train_on_features(TwoStreamRegressor(), zip(image, vel, labels), FAST)


class TestConvergence:
    """Tests for what training reaches."""

    def test_learns_linear_target(self):
        # Arrange
        image, vel, labels = linear_problem(512)
        config = FAST.model_copy(update={"final_epochs": 200})

        # Act
        report = train_on_features(TwoStreamRegressor(seed=2), zip(image, vel, labels), config)

        # Assert
        assert report.final_heldout_loss < 0.05
        assert report.final_heldout_loss < report.initial_heldout_loss
        assert report.n_train + report.n_heldout == 512
        assert report.n_heldout > 0

    def test_constant_label(self):
        image, vel, _ = linear_problem(128)
        labels = np.tile([0.2, 0.1, 0.05, 0.01], (128, 1))
        report = train_on_features(TwoStreamRegressor(seed=5), zip(image, vel, labels), FAST)
        predicted = report.model.predict_batch(image[:10], vel[:10])
        assert predicted == pytest.approx(labels[:10], abs=0.1)

    def test_curve_records_every_epoch(self):
        image, vel, labels = linear_problem(128)
        report = train_on_features(TwoStreamRegressor(), zip(image, vel, labels), FAST)
        epochs = [record.epoch for record in report.curve]
        assert epochs == list(range(1, len(epochs) + 1))
        assert report.curve[-1].samples == 128

    def test_same_seed_same_model(self):
        image, vel, labels = linear_problem(96)
        first = train_on_features(TwoStreamRegressor(seed=1), zip(image, vel, labels), FAST)
        second = train_on_features(TwoStreamRegressor(seed=1), zip(image, vel, labels), FAST)
        assert first.final_heldout_loss == second.final_heldout_loss
        assert first.cost_model.c_ref == second.cost_model.c_ref

    def test_divergence_is_reported(self):
        image, vel, labels = linear_problem(128)
        config = FAST.model_copy(update={"learning_rate": 100.0})
        with pytest.raises(TrainingDivergedError):
            train_on_features(TwoStreamRegressor(), zip(image, vel, labels), config)


class TestTrainOnline:
    """Tests for training straight from samples."""

    def test_brightness_dependent_labels(self):
        rng = np.random.default_rng(8)
        samples = []
        for i in range(96):
            brightness = rng.integers(0, 256)
            samples.append(Sample(
                sample_id=i,
                patch=np.full((8, 8, 3), brightness, dtype=np.uint8),
                vel_hist=np.vstack([np.full(4, 0.3), np.zeros(4)]),
                label=np.array([brightness / 255.0, 0.0, 0.1, 0.0]),
                surface_id=1,
            ))
        report = train_online(TwoStreamRegressor(patch_size=8), iter(samples), FAST, patch_size=8)
        assert report.final_heldout_loss < report.initial_heldout_loss
        assert report.cost_model.c_ref > 0.0
