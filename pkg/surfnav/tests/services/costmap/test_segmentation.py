"""
Tests for weak segmentation.
"""
import numpy as np
import pytest

from surfnav.services.costmap.models import SamplingConfig
from surfnav.services.costmap.segmentation import fit_histogram_gmm, quantize, sobel_magnitude, weak_segment

BIC_SEEDS = 100


def two_tone(size: int = 200, left: float = 40.0, right: float = 200.0) -> np.ndarray:
    gray = np.full((size, size), left)
    gray[:, size // 2:] = right
    return gray


class TestSobel:
    """Tests for sobel_magnitude."""

    def test_flat_image(self):
        assert np.all(sobel_magnitude(np.full((20, 20), 77.0)) == 0.0)

    def test_edge_columns(self):
        gradient = sobel_magnitude(two_tone(20), smoothing_sigma=0.0)
        assert np.all(gradient[:, :9] == 0.0)
        assert np.all(gradient[:, 9:11] > 0.0)
        assert np.all(gradient[:, 11:] == 0.0)


class TestQuantize:
    """Tests for histogram quantization."""

    def test_all_zero(self):
        values, width = quantize(np.zeros(10))
        assert width == 0.0
        assert np.all(values == 0.0)

    def test_bin_centres(self):
        values, width = quantize(np.array([0.0, 256.0]))
        assert width == 1.0
        assert values.tolist() == [0.5, 255.5]


class TestWeakSegment:
    """Tests for weak_segment."""

    def test_constant_image_is_one_region(self):
        seg = weak_segment(np.full((60, 80), 128.0))
        assert seg.k == 1
        assert np.all(seg.region_labels == 1)
        assert np.all(seg.class_raster == 0)

    def test_two_tone_boundary(self):
        # Act
        seg = weak_segment(two_tone())

        # Assert
        assert seg.k >= 2
        assert seg.region_labels.shape == (200, 200)
        assert seg.region_labels.min() >= 1
        assert seg.region_labels[100, 10] != seg.region_labels[100, 190]
        edge_rows, edge_cols = np.nonzero(seg.class_raster == seg.k - 1)
        assert edge_cols.mean() == pytest.approx(99.5, abs=2.0)

    def test_empty_image(self):
        with pytest.raises(ValueError):
            weak_segment(np.zeros((0, 0)))


class TestMixtureSelection:
    """Tests for the BIC mixture choice."""

    def test_markers_are_increasing(self, rng):
        values = np.concatenate([rng.normal(5.0, 1.0, 2000), rng.normal(60.0, 2.0, 2000)]).clip(min=0.0)
        markers = fit_histogram_gmm(values, SamplingConfig())
        assert markers.size >= 2
        assert np.all(np.diff(markers) > 0.0)
        assert markers[0] == pytest.approx(5.0, abs=1.0)
        assert markers[-1] == pytest.approx(60.0, abs=2.0)

    @pytest.mark.slow
    def test_single_gaussian_prefers_one_component(self):
        hits = 0
        for seed in range(BIC_SEEDS):
            values = np.random.default_rng(seed).normal(50.0, 5.0, 10_000).clip(min=0.0)
            hits += fit_histogram_gmm(values, SamplingConfig(seed=seed)).size == 1
        assert hits >= 95
