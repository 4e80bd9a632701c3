"""
Two-stream tanh MLP with hand-derived backpropagation.
"""
from typing import Dict, Optional, Tuple

import numpy as np

from surfnav.exceptions import ModelNotTrainedError
from .features import IMAGE_FEATURES, VELOCITY_FEATURES, extract_features
from .interface import SurfaceRegressor

LABEL_DIM = 4
PARAMETER_ORDER = ("W1", "b1", "W2", "b2", "W3", "b3", "W4", "b4")


def _floored_std(values: np.ndarray) -> np.ndarray:
    std = values.std(axis=0)
    return np.where(std > 1e-12, std, 1.0)


class TwoStreamRegressor(SurfaceRegressor):
    """
    Image stream 11 -> 16 (tanh), velocity stream 6 -> 8 (tanh), head
    24 -> 16 (tanh) -> 4 (linear, standardized label space).

    Predictions are destandardized and clamped at zero.
    """

    def __init__(
        self,
        patch_size: int = 50,
        seed: int = 0,
        image_hidden: int = 16,
        velocity_hidden: int = 8,
        head_hidden: int = 16,
    ):
        self.patch_size = patch_size
        self.image_hidden = image_hidden
        self.velocity_hidden = velocity_hidden
        self.head_hidden = head_hidden
        rng = np.random.default_rng(seed)
        concat = image_hidden + velocity_hidden
        self._params = {
            "W1": rng.normal(0.0, 1.0 / np.sqrt(IMAGE_FEATURES), (image_hidden, IMAGE_FEATURES)),
            "b1": np.zeros(image_hidden),
            "W2": rng.normal(0.0, 1.0 / np.sqrt(VELOCITY_FEATURES), (velocity_hidden, VELOCITY_FEATURES)),
            "b2": np.zeros(velocity_hidden),
            "W3": rng.normal(0.0, 1.0 / np.sqrt(concat), (head_hidden, concat)),
            "b3": np.zeros(head_hidden),
            "W4": rng.normal(0.0, 1.0 / np.sqrt(head_hidden), (LABEL_DIM, head_hidden)),
            "b4": np.zeros(LABEL_DIM),
        }
        self.image_mean: Optional[np.ndarray] = None
        self.image_std: Optional[np.ndarray] = None
        self.vel_mean: Optional[np.ndarray] = None
        self.vel_std: Optional[np.ndarray] = None
        self.label_mean: Optional[np.ndarray] = None
        self.label_std: Optional[np.ndarray] = None
        self.step_count = 0

    @property
    def dims(self) -> Tuple[int, ...]:
        return (self.patch_size, IMAGE_FEATURES, VELOCITY_FEATURES,
                self.image_hidden, self.velocity_hidden, self.head_hidden, LABEL_DIM)

    @property
    def is_trained(self) -> bool:
        return self.label_mean is not None

    def parameters(self) -> Dict[str, np.ndarray]:
        return self._params

    def parameter_count(self) -> int:
        return int(sum(p.size for p in self._params.values()))

    def set_normalization(self, image_x: np.ndarray, vel_x: np.ndarray, labels: np.ndarray) -> None:
        self.image_mean, self.image_std = image_x.mean(axis=0), _floored_std(image_x)
        self.vel_mean, self.vel_std = vel_x.mean(axis=0), _floored_std(vel_x)
        self.label_mean, self.label_std = labels.mean(axis=0), _floored_std(labels)

    def standardize(self, image_x, vel_x, labels=None):
        if not self.is_trained:
            raise ModelNotTrainedError("normalization statistics are not set")
        image_z = (np.asarray(image_x) - self.image_mean) / self.image_std
        vel_z = (np.asarray(vel_x) - self.vel_mean) / self.vel_std
        if labels is None:
            return image_z, vel_z
        return image_z, vel_z, (np.asarray(labels) - self.label_mean) / self.label_std

    def _forward_cache(self, image_z: np.ndarray, vel_z: np.ndarray):
        p = self._params
        h1 = np.tanh(image_z @ p["W1"].T + p["b1"])
        h2 = np.tanh(vel_z @ p["W2"].T + p["b2"])
        concat = np.concatenate([h1, h2], axis=1)
        h3 = np.tanh(concat @ p["W3"].T + p["b3"])
        out = h3 @ p["W4"].T + p["b4"]
        return h1, h2, concat, h3, out

    def forward(self, image_z: np.ndarray, vel_z: np.ndarray) -> np.ndarray:
        return self._forward_cache(np.atleast_2d(image_z), np.atleast_2d(vel_z))[-1]

    def loss_and_gradients(self, image_z, vel_z, labels_z):
        image_z = np.atleast_2d(image_z)
        vel_z = np.atleast_2d(vel_z)
        labels_z = np.atleast_2d(labels_z)
        p = self._params
        h1, h2, concat, h3, out = self._forward_cache(image_z, vel_z)

        residual = out - labels_z
        loss = float(np.mean(residual ** 2))

        d_out = 2.0 * residual / residual.size
        grads = {"W4": d_out.T @ h3, "b4": d_out.sum(axis=0)}
        d_h3 = (d_out @ p["W4"]) * (1.0 - h3 ** 2)
        grads["W3"] = d_h3.T @ concat
        grads["b3"] = d_h3.sum(axis=0)
        d_concat = d_h3 @ p["W3"]
        d_h1 = d_concat[:, :self.image_hidden] * (1.0 - h1 ** 2)
        d_h2 = d_concat[:, self.image_hidden:] * (1.0 - h2 ** 2)
        grads["W1"] = d_h1.T @ image_z
        grads["b1"] = d_h1.sum(axis=0)
        grads["W2"] = d_h2.T @ vel_z
        grads["b2"] = d_h2.sum(axis=0)
        return loss, grads

    def predict_batch(self, image_x: np.ndarray, vel_x: np.ndarray) -> np.ndarray:
        image_z, vel_z = self.standardize(np.atleast_2d(image_x), np.atleast_2d(vel_x))
        raw = self.forward(image_z, vel_z) * self.label_std + self.label_mean
        return np.maximum(raw, 0.0)

    def predict(self, patch: np.ndarray, vel_hist: np.ndarray) -> np.ndarray:
        """Label estimate for one patch and velocity history."""
        features = extract_features(patch, vel_hist, self.patch_size)
        return self.predict_batch(features.image[None, :], features.velocity[None, :])[0]
