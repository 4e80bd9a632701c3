"""
Self-supervised label math: IMU principal-axis spread and odometry errors.
"""
import math
from typing import NamedTuple, Tuple

import numpy as np

from surfnav.exceptions import LabelComputationError
from surfnav.utils.constants.enums import VarianceMode
from surfnav.utils.helpers.geometry import wrap_angle
from surfnav.utils.logging.logger import get_logger

logger = get_logger(__name__)


class OdomDeltas(NamedTuple):
    """Displacement and heading change over one label window."""
    d_loam: float
    theta_loam: float
    d_odom: float
    theta_odom: float


def pca_variances(imu_window: np.ndarray, mode: VarianceMode = VarianceMode.VARIANCE) -> Tuple[float, float]:
    """
    Spread of an IMU window along its top two principal axes.

    The 6x6 sample covariance (mean-centred, divided by N-1) is
    eigendecomposed; its two largest eigenvalues are returned, or their
    square roots in ``std`` mode.

    Args:
        imu_window: (6, N) readings, N >= 2
        mode: ``variance`` or ``std``

    Returns:
        (s_pc1, s_pc2) with s_pc1 >= s_pc2 >= 0

    Raises:
        LabelComputationError: fewer than two samples or non-finite input
    """
    window = np.asarray(imu_window, dtype=float)
    if window.ndim != 2 or window.shape[1] < 2:
        raise LabelComputationError(f"IMU window needs shape (channels, N>=2), got {window.shape}")
    if not np.all(np.isfinite(window)):
        raise LabelComputationError("IMU window contains non-finite readings")

    cov = np.cov(window, ddof=1)
    eigenvalues = np.linalg.eigvalsh(cov)[::-1]
    top = np.clip(eigenvalues[:2], 0.0, None)
    if VarianceMode(mode) == VarianceMode.STD:
        top = np.sqrt(top)
    return float(top[0]), float(top[1])


def odom_errors(d_loam: float, theta_loam: float, d_odom: float, theta_odom: float) -> Tuple[float, float]:
    """Ground-truth minus wheel-odometry change in distance and heading."""
    return d_loam - d_odom, theta_loam - theta_odom


def pose_deltas(
    true_start: Tuple[float, float, float],
    true_end: Tuple[float, float, float],
    odom_start: Tuple[float, float, float],
    odom_end: Tuple[float, float, float],
) -> OdomDeltas:
    """Distance travelled and heading change of both pose sources over a window."""
    return OdomDeltas(
        d_loam=math.hypot(true_end[0] - true_start[0], true_end[1] - true_start[1]),
        theta_loam=float(wrap_angle(true_end[2] - true_start[2])),
        d_odom=math.hypot(odom_end[0] - odom_start[0], odom_end[1] - odom_start[1]),
        theta_odom=float(wrap_angle(odom_end[2] - odom_start[2])),
    )


def make_label(
    imu_window: np.ndarray,
    deltas: OdomDeltas,
    mode: VarianceMode = VarianceMode.VARIANCE,
) -> np.ndarray:
    """
    Assemble the label vector [s_pc1, s_pc2, |d_error|, |theta_error|].

    Signed odometry errors are logged at debug level.
    """
    s1, s2 = pca_variances(imu_window, mode)
    d_error, theta_error = odom_errors(*deltas)
    logger.debug(f"label odometry errors d={d_error:+.6f} theta={theta_error:+.6f}")
    return np.array([s1, s2, abs(d_error), abs(theta_error)], dtype=float)
