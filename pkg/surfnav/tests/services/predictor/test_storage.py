"""
Tests for the model file.
"""
import struct

import numpy as np
import pytest

from surfnav.exceptions import ModelFormatError, ModelNotTrainedError
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.features import IMAGE_FEATURES, VELOCITY_FEATURES
from surfnav.services.predictor.implementation import TwoStreamRegressor
from surfnav.services.predictor.storage import load_model, save_model

COST = CostModel(weights=np.array([1.0, 2.0, 0.5, 1.0]), c_ref=0.37)


@pytest.fixture
def trained(rng):
    model = TwoStreamRegressor(patch_size=32, seed=6)
    model.set_normalization(
        rng.normal(size=(30, IMAGE_FEATURES)), rng.normal(size=(30, VELOCITY_FEATURES)), rng.uniform(size=(30, 4))
    )
    return model


class TestModelFile:
    """Tests for save_model / load_model."""

    def test_round_trip(self, tmp_path, trained, rng):
        path = save_model(tmp_path / "m" / "model.bin", trained, COST)
        model, cost = load_model(path)

        image = rng.normal(size=(5, IMAGE_FEATURES))
        vel = rng.normal(size=(5, VELOCITY_FEATURES))
        assert model.patch_size == 32
        assert model.predict_batch(image, vel).tolist() == trained.predict_batch(image, vel).tolist()
        assert cost.weights.tolist() == COST.weights.tolist()
        assert cost.c_ref == COST.c_ref

    def test_untrained_model_is_not_saved(self, tmp_path):
        with pytest.raises(ModelNotTrainedError):
            save_model(tmp_path / "model.bin", TwoStreamRegressor(), COST)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelFormatError):
            load_model(tmp_path / "absent.bin")

    def test_bad_magic(self, tmp_path, trained):
        path = save_model(tmp_path / "model.bin", trained, COST)
        path.write_bytes(b"XXXX" + path.read_bytes()[4:])
        with pytest.raises(ModelFormatError):
            load_model(path)

    def test_unknown_version(self, tmp_path, trained):
        path = save_model(tmp_path / "model.bin", trained, COST)
        data = bytearray(path.read_bytes())
        data[4:8] = struct.pack("<I", 99)
        path.write_bytes(bytes(data))
        with pytest.raises(ModelFormatError):
            load_model(path)

    @pytest.mark.parametrize("keep", [10, -8])
    def test_truncated(self, tmp_path, trained, keep):
        path = save_model(tmp_path / "model.bin", trained, COST)
        path.write_bytes(path.read_bytes()[:keep])
        with pytest.raises(ModelFormatError):
            load_model(path)
