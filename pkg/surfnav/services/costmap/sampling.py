"""
Hierarchical 4n / 2n / n patch selection.
"""
from typing import List

import numpy as np

from surfnav.utils.constants.enums import PatchRule
from .models import Patch, PatchSet, WeakSegmentation


def dominant_fraction(labels: np.ndarray) -> float:
    """Share of the pixels carried by the most frequent region label."""
    counts = np.bincount(labels.ravel())
    return float(counts.max()) / labels.size


def literal_rule(gradient: np.ndarray, markers: np.ndarray, n: int, xi: float) -> bool:
    """
    count(gradient >= mu_i) / n^2 > xi for some marker, with n^2 taken
    literally for every patch size.
    """
    return any(np.count_nonzero(gradient >= mu) / float(n * n) > xi for mu in markers)


def single_surface(seg: WeakSegmentation, x: int, y: int, side: int, n: int, xi: float, rule: PatchRule) -> bool:
    if PatchRule(rule) == PatchRule.LITERAL:
        return literal_rule(seg.gradient[y:y + side, x:x + side], seg.markers, n, xi)
    return dominant_fraction(seg.region_labels[y:y + side, x:x + side]) > xi


def select_patches(seg: WeakSegmentation, n: int, xi: float, rule: PatchRule = PatchRule.DOMINANT) -> PatchSet:
    """
    Tile the segmented image with 4n patches, refining only where needed.

    A 4n patch is kept when it passes the single-surface test; otherwise
    its four 2n quadrants are tested the same way, and failing quadrants
    split into four n patches that are always kept.

    Args:
        seg: Weak segmentation of the resized image
        n: Smallest patch side
        xi: Threshold in (0, 1]
        rule: ``dominant`` region fraction or the ``literal`` marker count

    Returns:
        PatchSet partitioning the image
    """
    height, width = seg.region_labels.shape
    big = 4 * n
    if width % big or height % big:
        raise ValueError(f"image {width}x{height} is not a multiple of 4n = {big}")

    patches: List[Patch] = []
    for y in range(0, height, big):
        for x in range(0, width, big):
            if single_surface(seg, x, y, big, n, xi, rule):
                patches.append(Patch(x, y, big))
                continue
            for qy in (y, y + 2 * n):
                for qx in (x, x + 2 * n):
                    if single_surface(seg, qx, qy, 2 * n, n, xi, rule):
                        patches.append(Patch(qx, qy, 2 * n))
                        continue
                    for sy in (qy, qy + n):
                        for sx in (qx, qx + n):
                            patches.append(Patch(sx, sy, n))
    return PatchSet(width, height, patches)


def uniform_patches(width: int, height: int, n: int) -> PatchSet:
    """The full n-grid over a width x height image."""
    if width % n or height % n:
        raise ValueError(f"image {width}x{height} is not a multiple of n = {n}")
    return PatchSet(width, height, [Patch(x, y, n) for y in range(0, height, n) for x in range(0, width, n)])


def uniform_count(width: int, height: int, n: int) -> int:
    return (width // n) * (height // n)
