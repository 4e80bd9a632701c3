"""
Weak segmentation: Sobel gradient, BIC-selected mixture over its histogram,
and marker-seeded watershed.
"""
from typing import Tuple

import numpy as np
from scipy import ndimage
from skimage.morphology import remove_small_objects
from skimage.segmentation import watershed
from sklearn.mixture import GaussianMixture

from surfnav.utils.logging.logger import get_logger
from .models import SamplingConfig, WeakSegmentation

logger = get_logger(__name__)

HISTOGRAM_BINS = 256


def sobel_magnitude(gray: np.ndarray, smoothing_sigma: float = 0.0) -> np.ndarray:
    """Gradient magnitude from the 3x3 Sobel kernels."""
    image = np.asarray(gray, dtype=float)
    if smoothing_sigma > 0.0:
        image = ndimage.gaussian_filter(image, smoothing_sigma, mode="nearest")
    gx = ndimage.sobel(image, axis=1, mode="nearest")
    gy = ndimage.sobel(image, axis=0, mode="nearest")
    return np.hypot(gx, gy)


def quantize(values: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Map nonnegative values to the centres of a 256-bin histogram over [0, max].

    Returns:
        (bin-centre values, bin width); width 0 when every value is 0
    """
    values = np.asarray(values, dtype=float).ravel()
    top = float(values.max()) if values.size else 0.0
    if top <= 0.0:
        return np.zeros_like(values), 0.0
    width = top / HISTOGRAM_BINS
    bins = np.minimum((values / width).astype(int), HISTOGRAM_BINS - 1)
    return (bins + 0.5) * width, width


def fit_histogram_gmm(values: np.ndarray, config: SamplingConfig) -> np.ndarray:
    """
    Fit 1-D mixtures with k = 1..k_max to quantized values and keep the
    lowest-BIC one.

    Args:
        values: Nonnegative samples (e.g. gradient magnitudes)
        config: Mixture settings and seed

    Returns:
        Strictly increasing component means
    """
    quantized, width = quantize(values)
    distinct = np.unique(quantized)
    if width == 0.0 or distinct.size == 1:
        return np.array([float(quantized.mean()) if quantized.size else 0.0])

    rng = np.random.default_rng(config.seed)
    if quantized.size > config.max_samples:
        quantized = rng.choice(quantized, size=config.max_samples, replace=False)
    data = quantized.reshape(-1, 1)

    best_bic, best_means = np.inf, None
    for k in range(1, min(config.k_max, distinct.size) + 1):
        gmm = GaussianMixture(
            n_components=k,
            reg_covar=config.gmm_reg_covar,
            tol=config.gmm_tol,
            max_iter=config.gmm_max_iter,
            init_params="kmeans",
            random_state=config.seed,
        )
        gmm.fit(data)
        bic = gmm.bic(data)
        if bic < best_bic:
            best_bic, best_means = bic, np.sort(gmm.means_.ravel())

    means = np.unique(best_means)
    logger.debug(f"mixture selected k={means.size} (BIC {best_bic:.1f})")
    return means


def weak_segment(gray: np.ndarray, config: SamplingConfig = None) -> WeakSegmentation:
    """
    Demarcate surface regions of a grayscale image.

    Pixels take the class of their nearest mixture mean. Connected
    components of each class, minus those smaller than ``min_seed_size``,
    seed a watershed flood over the gradient magnitude, so every pixel ends
    up in exactly one region. Each region remembers its seed class.

    Args:
        gray: (h, w) grayscale image
        config: Segmentation settings

    Returns:
        WeakSegmentation with 1-based region labels
    """
    config = config or SamplingConfig()
    gray = np.asarray(gray, dtype=float)
    if gray.size == 0:
        raise ValueError("cannot segment an empty image")

    gradient = sobel_magnitude(gray, config.smoothing_sigma)
    markers = fit_histogram_gmm(gradient, config)
    if markers.size == 1:
        return WeakSegmentation(
            markers=markers,
            region_labels=np.ones(gray.shape, dtype=np.int32),
            region_classes=np.zeros(2, dtype=np.int32),
            gradient=gradient,
        )

    classes = np.argmin(np.abs(gradient[..., None] - markers[None, None, :]), axis=-1)
    seeds, seed_classes = _class_seeds(classes, markers.size, config.min_seed_size)
    if seed_classes.size == 1:
        seeds, seed_classes = _class_seeds(classes, markers.size, 0)

    labels = watershed(gradient, markers=seeds).astype(np.int32)
    return WeakSegmentation(
        markers=markers,
        region_labels=labels,
        region_classes=seed_classes.astype(np.int32),
        gradient=gradient,
    )


def _class_seeds(classes: np.ndarray, k: int, min_size: int):
    """Connected components of every class, numbered consecutively from 1."""
    seeds = np.zeros(classes.shape, dtype=np.int32)
    seed_classes = [0]  # region 0 is unused
    for cls in range(k):
        mask = classes == cls
        if min_size > 0:
            mask = remove_small_objects(mask, min_size=min_size)
        components, count = ndimage.label(mask)
        if count == 0:
            continue
        seeds[components > 0] = components[components > 0] + len(seed_classes) - 1
        seed_classes.extend([cls] * count)
    return seeds, np.array(seed_classes)
