"""
Tests for resizing to patch-size multiples.
"""
import numpy as np
import pytest

from surfnav.exceptions import ImageSizeError
from surfnav.services.costmap.resize import resize_image, resize_to_multiple


class TestResizeToMultiple:
    """Tests for resize_to_multiple."""

    @pytest.mark.parametrize("size,base,expected", [
        ((640, 480), 50, (650, 500)),
        ((640, 480), 200, (600, 400)),
        ((650, 500), 50, (650, 500)),
        ((125, 75), 50, (150, 100)),
    ])
    def test_nearest_multiple(self, size, base, expected):
        assert resize_to_multiple(*size, base) == expected

    def test_too_small(self):
        with pytest.raises(ImageSizeError):
            resize_to_multiple(10, 480, 200)

    def test_bad_base(self):
        with pytest.raises(ValueError):
            resize_to_multiple(640, 480, 0)


class TestResizeImage:
    """Tests for resize_image."""

    def test_shape_and_dtype(self, rng):
        image = rng.integers(0, 256, size=(480, 640, 3), dtype=np.uint8)
        resized = resize_image(image, 200)
        assert resized.shape == (400, 600, 3)
        assert resized.dtype == np.uint8

    def test_exact_multiple_is_untouched(self, rng):
        image = rng.integers(0, 256, size=(100, 150, 3), dtype=np.uint8)
        assert np.array_equal(resize_image(image, 50), image)
