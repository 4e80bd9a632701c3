"""
Small geometry and raster helpers shared across services.
"""
import math
from typing import Tuple

import numpy as np
from skimage.transform import resize


def wrap_angle(theta):
    """Wrap an angle (scalar or array) to (-pi, pi]."""
    wrapped = np.mod(np.asarray(theta, dtype=float) + math.pi, 2.0 * math.pi) - math.pi
    wrapped = np.where(wrapped <= -math.pi, wrapped + 2.0 * math.pi, wrapped)
    if np.ndim(theta) == 0:
        return float(wrapped)
    return wrapped


def to_robot_frame(pose: Tuple[float, float, float], x: float, y: float) -> Tuple[float, float]:
    """Express a world point in the frame of a robot at ``pose``."""
    px, py, theta = pose
    dx, dy = x - px, y - py
    c, s = math.cos(theta), math.sin(theta)
    return c * dx + s * dy, -s * dx + c * dy


def to_world_frame(pose: Tuple[float, float, float], xs, ys):
    """Express robot-frame points (arrays) in the world frame."""
    px, py, theta = pose
    c, s = math.cos(theta), math.sin(theta)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    return px + c * xs - s * ys, py + s * xs + c * ys


def round_half_away(value: float) -> int:
    """Nearest integer with halves rounded away from zero."""
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def resample_bilinear(raster: np.ndarray, width: int, height: int) -> np.ndarray:
    """
    Bilinear resample of an (h, w) or (h, w, c) raster to ``width`` x ``height``.

    Values are kept in the input range and dtype; same-size input is returned
    unchanged.
    """
    if raster.shape[0] == height and raster.shape[1] == width:
        return raster.copy()
    out_shape = (height, width) + tuple(raster.shape[2:])
    resized = resize(
        raster.astype(float),
        out_shape,
        order=1,
        mode="edge",
        anti_aliasing=False,
        preserve_range=True,
    )
    if np.issubdtype(raster.dtype, np.integer):
        info = np.iinfo(raster.dtype)
        return np.clip(np.rint(resized), info.min, info.max).astype(raster.dtype)
    return resized.astype(raster.dtype)


def resample_nearest(raster: np.ndarray, width: int, height: int) -> np.ndarray:
    """Nearest-neighbour resample (used for label and provenance rasters)."""
    if raster.shape[0] == height and raster.shape[1] == width:
        return raster.copy()
    rows = np.minimum((np.arange(height) + 0.5) * raster.shape[0] / height, raster.shape[0] - 1).astype(int)
    cols = np.minimum((np.arange(width) + 0.5) * raster.shape[1] / width, raster.shape[1] - 1).astype(int)
    return raster[np.ix_(rows, cols)]


def to_gray(image: np.ndarray) -> np.ndarray:
    """Luma (BT.601) of an RGB image as float in [0, 255]."""
    rgb = image.astype(float)
    return 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
