"""
Domain types for weak segmentation, patch sampling and surface costmaps.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, Field

from surfnav.utils.constants.enums import PatchRule, SamplingMode


class SamplingConfig(BaseModel):
    """Weak segmentation and patch sampling settings."""
    patch_size: int = Field(50, ge=2, description="Smallest patch side n (pixels)")
    xi: float = Field(0.8, gt=0.0, le=1.0, description="Single-surface fraction threshold")
    mode: SamplingMode = SamplingMode.HIERARCHICAL
    patch_rule: PatchRule = PatchRule.DOMINANT
    k_max: int = Field(5, ge=1, description="Largest mixture size tried by BIC")
    gmm_max_iter: int = Field(100, ge=1)
    gmm_tol: float = Field(1e-6, gt=0.0)
    gmm_reg_covar: float = Field(1e-4, gt=0.0)
    max_samples: int = Field(4096, ge=16, description="Cap on gradient samples fed to EM")
    smoothing_sigma: float = Field(1.0, ge=0.0)
    min_seed_size: int = Field(16, ge=0, description="Smallest connected seed kept for flooding")
    seed: int = 0


@dataclass(frozen=True)
class WeakSegmentation:
    """Mixture markers and the watershed region raster they seeded."""
    markers: np.ndarray  # sorted component means (gradient units)
    region_labels: np.ndarray  # (h', w') int, 1-based region ids
    region_classes: np.ndarray  # region id -> marker index; entry 0 unused
    gradient: np.ndarray  # (h', w') Sobel magnitude

    @property
    def k(self) -> int:
        return int(len(self.markers))

    @property
    def class_raster(self) -> np.ndarray:
        """Marker index of every pixel."""
        return self.region_classes[self.region_labels]


@dataclass(frozen=True)
class Patch:
    """Axis-aligned square patch with top-left corner (x, y)."""
    x: int
    y: int
    side: int


@dataclass
class PatchSet:
    """Square patches tiling a width x height image."""
    width: int
    height: int
    patches: List[Patch] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.patches)

    def coverage(self) -> np.ndarray:
        """How many patches cover each pixel."""
        counts = np.zeros((self.height, self.width), dtype=np.int32)
        for p in self.patches:
            counts[p.y:p.y + p.side, p.x:p.x + p.side] += 1
        return counts

    def is_partition(self) -> bool:
        inside = all(
            p.x >= 0 and p.y >= 0 and p.x + p.side <= self.width and p.y + p.side <= self.height
            for p in self.patches
        )
        return inside and bool(np.all(self.coverage() == 1))

    def side_counts(self) -> dict:
        counts = {}
        for p in self.patches:
            counts[p.side] = counts.get(p.side, 0) + 1
        return counts


@dataclass
class SurfaceCostMap:
    """
    Per-pixel navigability cost over the camera image.

    ``provenance`` holds, per pixel, the index of the patch in ``patches``
    whose prediction painted it.
    """
    values: np.ndarray  # (h, w) in [0, pi/2]
    provenance: np.ndarray  # (h, w) int
    patches: PatchSet
    patch_costs: np.ndarray  # (len(patches),)
    resized_shape: Tuple[int, int]  # (w', h')
    mode: SamplingMode = SamplingMode.HIERARCHICAL

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape

    @classmethod
    def constant(cls, width: int, height: int, value: float) -> "SurfaceCostMap":
        """A single-patch map holding one value everywhere."""
        return cls(
            values=np.full((height, width), float(value)),
            provenance=np.zeros((height, width), dtype=np.int32),
            patches=PatchSet(width, height, [Patch(0, 0, max(width, height))]),
            patch_costs=np.array([float(value)]),
            resized_shape=(width, height),
        )

    @classmethod
    def from_raster(cls, values: np.ndarray) -> "SurfaceCostMap":
        """Wrap an arbitrary cost raster (no patch provenance)."""
        values = np.asarray(values, dtype=float)
        height, width = values.shape
        return cls(
            values=values,
            provenance=np.zeros((height, width), dtype=np.int32),
            patches=PatchSet(width, height, [Patch(0, 0, max(width, height))]),
            patch_costs=np.array([float(values.mean())]),
            resized_shape=(width, height),
        )
