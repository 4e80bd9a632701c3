"""
Tests for hierarchical patch selection.
"""
import numpy as np
import pytest

from surfnav.services.costmap.models import WeakSegmentation
from surfnav.services.costmap.sampling import dominant_fraction, select_patches, uniform_count, uniform_patches
from surfnav.utils.constants.enums import PatchRule

N = 50
XI = 0.8


def segmentation(labels: np.ndarray, gradient: np.ndarray = None) -> WeakSegmentation:
    labels = labels.astype(np.int32)
    return WeakSegmentation(
        markers=np.array([0.0, 10.0]),
        region_labels=labels,
        region_classes=np.arange(labels.max() + 1, dtype=np.int32) % 2,
        gradient=np.zeros(labels.shape) if gradient is None else gradient,
    )


def split_at(width: int, height: int, column: int) -> np.ndarray:
    labels = np.ones((height, width), dtype=np.int32)
    labels[:, column:] = 2
    return labels


class TestSelectPatches:
    """Tests for select_patches."""

    def test_single_region_keeps_big_patches(self):
        patches = select_patches(segmentation(np.ones((400, 600))), N, XI)
        assert patches.side_counts() == {4 * N: 6}
        assert patches.is_partition()

    def test_split_on_quadrant_boundary(self):
        patches = select_patches(segmentation(split_at(200, 200, 100)), N, XI)
        assert patches.side_counts() == {2 * N: 4}

    def test_split_inside_quadrant_needs_small_patches(self):
        # Act
        patches = select_patches(segmentation(split_at(200, 200, 75)), N, XI)

        # Assert
        assert patches.side_counts() == {2 * N: 2, N: 8}
        assert patches.is_partition()
        assert len(patches) <= uniform_count(200, 200, N)

    def test_threshold_is_strict(self):
        # 80% of the 4n patch is region 1
        patches = select_patches(segmentation(split_at(200, 200, 160)), N, XI)
        assert 4 * N not in patches.side_counts()

    def test_lower_threshold_keeps_mixed_patch(self):
        patches = select_patches(segmentation(split_at(200, 200, 160)), N, 0.7)
        assert patches.side_counts() == {4 * N: 1}

    def test_literal_rule(self):
        gradient = np.zeros((200, 200))
        gradient[:, 100:] = 20.0
        seg = segmentation(split_at(200, 200, 100), gradient)
        patches = select_patches(seg, N, XI, PatchRule.LITERAL)
        # every pixel has gradient >= the lowest marker and n^2 is used for every size
        assert patches.side_counts() == {4 * N: 1}

    def test_not_a_multiple(self):
        with pytest.raises(ValueError):
            select_patches(segmentation(np.ones((200, 250))), N, XI)

    def test_random_segmentations_partition(self, rng):
        for _ in range(10):
            labels = rng.integers(1, 4, size=(8, 16)).repeat(N // 2, axis=0).repeat(N // 2, axis=1)
            patches = select_patches(segmentation(labels), N, XI)
            assert patches.is_partition()
            assert len(patches) <= uniform_count(labels.shape[1], labels.shape[0], N)


class TestUniformGrid:
    """Tests for the uniform baseline grid."""

    def test_count(self):
        patches = uniform_patches(650, 500, N)
        assert len(patches) == uniform_count(650, 500, N) == 130
        assert patches.is_partition()

    def test_not_a_multiple(self):
        with pytest.raises(ValueError):
            uniform_patches(640, 500, N)


class TestDominantFraction:
    """Tests for dominant_fraction."""

    def test_fraction(self):
        assert dominant_fraction(split_at(10, 10, 7)) == pytest.approx(0.7)
