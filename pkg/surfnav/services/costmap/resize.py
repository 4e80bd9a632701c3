"""
Resizing images to patch-size multiples.
"""
from typing import Tuple

import numpy as np

from surfnav.exceptions import ImageSizeError
from surfnav.utils.helpers.geometry import resample_bilinear, round_half_away


def resize_to_multiple(w: int, h: int, base: int) -> Tuple[int, int]:
    """
    Nearest multiples of ``base`` (halves rounded away from zero).

    Raises:
        ImageSizeError: either dimension rounds to zero
    """
    if base < 1:
        raise ValueError(f"base must be >= 1, got {base}")
    new_w = round_half_away(w / base) * base
    new_h = round_half_away(h / base) * base
    if new_w <= 0 or new_h <= 0:
        raise ImageSizeError(f"{w}x{h} rounds to {new_w}x{new_h} at base {base}")
    return new_w, new_h


def resize_image(image: np.ndarray, base: int) -> np.ndarray:
    """Bilinear resample of an image to the nearest ``base`` multiples."""
    h, w = image.shape[:2]
    new_w, new_h = resize_to_multiple(w, h, base)
    return resample_bilinear(image, new_w, new_h)
