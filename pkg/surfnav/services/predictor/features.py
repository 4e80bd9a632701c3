"""
Fixed patch and velocity-history statistics fed to the regressor.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import ndimage

from surfnav.utils.helpers.geometry import resample_bilinear, to_gray

IMAGE_FEATURES = 11
VELOCITY_FEATURES = 6


@dataclass(frozen=True)
class FeatureVector:
    image: np.ndarray  # (11,)
    velocity: np.ndarray  # (6,)


def image_features(patch: np.ndarray, patch_size: int) -> np.ndarray:
    """
    Colour and texture statistics of an RGB patch, intensities scaled to [0, 1].

    Patches of another size are first resampled to patch_size x patch_size.
    Values: channel means (3), channel stds (3), then on the grayscale patch
    mean |d/dx|, mean |d/dy|, gradient-magnitude std, gradient-magnitude mean
    and mean |Laplacian|.
    """
    patch = np.asarray(patch)
    if patch.shape[0] != patch_size or patch.shape[1] != patch_size:
        patch = resample_bilinear(patch, patch_size, patch_size)
    rgb = patch.astype(float) / 255.0
    gray = to_gray(patch) / 255.0

    gx = np.diff(gray, axis=1)
    gy = np.diff(gray, axis=0)
    magnitude = np.hypot(gx[:-1, :], gy[:, :-1])
    laplacian = ndimage.laplace(gray, mode="nearest")

    return np.concatenate([
        rgb.reshape(-1, 3).mean(axis=0),
        rgb.reshape(-1, 3).std(axis=0),
        [
            np.abs(gx).mean(),
            np.abs(gy).mean(),
            magnitude.std(),
            magnitude.mean(),
            np.abs(laplacian).mean(),
        ],
    ])


def velocity_features(vel_hist: np.ndarray) -> np.ndarray:
    """(mean v, std v, mean |w|, std w, last v, last w) of a 2 x k history."""
    hist = np.asarray(vel_hist, dtype=float)
    v, w = hist[0], hist[1]
    return np.array([v.mean(), v.std(), np.abs(w).mean(), w.std(), v[-1], w[-1]])


def extract_features(patch: np.ndarray, vel_hist: np.ndarray, patch_size: int = 50) -> FeatureVector:
    return FeatureVector(image=image_features(patch, patch_size), velocity=velocity_features(vel_hist))


def extract_batch(patches: Sequence[np.ndarray], vel_hists: Sequence[np.ndarray], patch_size: int = 50):
    """Stacked (m, 11) image and (m, 6) velocity features."""
    image = np.array([image_features(p, patch_size) for p in patches]).reshape(-1, IMAGE_FEATURES)
    velocity = np.array([velocity_features(h) for h in vel_hists]).reshape(-1, VELOCITY_FEATURES)
    return image, velocity
