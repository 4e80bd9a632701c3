"""
Tests for the two-stream regressor and its factory.
"""
import numpy as np
import pytest

from surfnav.exceptions import ModelNotTrainedError
from surfnav.services.predictor.factory import RegressorFactory
from surfnav.services.predictor.features import IMAGE_FEATURES, VELOCITY_FEATURES
from surfnav.services.predictor.implementation import LABEL_DIM, TwoStreamRegressor
from surfnav.services.predictor.interface import SurfaceRegressor

EPS = 1e-6
GRADIENT_DRAWS = 100


def fitted_model(seed: int = 0) -> TwoStreamRegressor:
    model = TwoStreamRegressor(seed=seed)
    rng = np.random.default_rng(seed)
    model.set_normalization(
        rng.normal(size=(20, IMAGE_FEATURES)), rng.normal(size=(20, VELOCITY_FEATURES)), rng.uniform(size=(20, 4))
    )
    return model


class TestArchitecture:
    """Tests for shapes and initialization."""

    def test_parameter_count(self):
        assert TwoStreamRegressor().parameter_count() == 716

    def test_factory_is_seeded(self):
        first = RegressorFactory.create_regressor(patch_size=40, seed=3)
        second = RegressorFactory.create_regressor(patch_size=40, seed=3)
        assert isinstance(first, SurfaceRegressor)
        assert first.patch_size == 40
        for name, value in first.parameters().items():
            assert np.array_equal(value, second.parameters()[name])

    def test_forward_shape(self, rng):
        out = TwoStreamRegressor().forward(rng.normal(size=(5, IMAGE_FEATURES)), rng.normal(size=(5, VELOCITY_FEATURES)))
        assert out.shape == (5, LABEL_DIM)


class TestGradients:
    """Backpropagation checked against central differences."""

    def test_matches_finite_differences(self, rng):
        model = TwoStreamRegressor(seed=1)
        image_z = rng.normal(size=(6, IMAGE_FEATURES))
        vel_z = rng.normal(size=(6, VELOCITY_FEATURES))
        labels_z = rng.normal(size=(6, LABEL_DIM))
        _, grads = model.loss_and_gradients(image_z, vel_z, labels_z)
        params = model.parameters()
        names = sorted(params)

        for _ in range(GRADIENT_DRAWS):
            name = names[rng.integers(len(names))]
            index = tuple(rng.integers(dim) for dim in params[name].shape)
            original = params[name][index]
            params[name][index] = original + EPS
            plus, _ = model.loss_and_gradients(image_z, vel_z, labels_z)
            params[name][index] = original - EPS
            minus, _ = model.loss_and_gradients(image_z, vel_z, labels_z)
            params[name][index] = original

            numeric = (plus - minus) / (2.0 * EPS)
            assert grads[name][index] == pytest.approx(numeric, rel=1e-4, abs=1e-8), f"{name}{index}"


class TestPrediction:
    """Tests for destandardized predictions."""

    def test_untrained_model_refuses(self, rng):
        with pytest.raises(ModelNotTrainedError):
            TwoStreamRegressor().predict_batch(rng.normal(size=(1, IMAGE_FEATURES)), rng.normal(size=(1, VELOCITY_FEATURES)))

    def test_predictions_are_nonnegative(self, rng):
        out = fitted_model().predict_batch(rng.normal(size=(50, IMAGE_FEATURES)) * 5, rng.normal(size=(50, VELOCITY_FEATURES)) * 5)
        assert np.all(out >= 0.0)

    def test_identical_rows_give_identical_outputs(self, rng):
        image = np.repeat(rng.normal(size=(1, IMAGE_FEATURES)), 8, axis=0)
        vel = np.repeat(rng.normal(size=(1, VELOCITY_FEATURES)), 8, axis=0)
        out = fitted_model().predict_batch(image, vel)
        assert all(row.tolist() == out[0].tolist() for row in out)

    def test_predict_from_patch(self, rng):
        model = fitted_model()
        patch = rng.integers(0, 256, size=(50, 50, 3), dtype=np.uint8)
        label = model.predict(patch, rng.uniform(size=(2, 25)))
        assert label.shape == (LABEL_DIM,)
