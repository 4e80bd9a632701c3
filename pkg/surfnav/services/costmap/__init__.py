"""
Weak segmentation, non-uniform patch sampling and surface costmaps.
"""
from .models import Patch, PatchSet, SamplingConfig, SurfaceCostMap, WeakSegmentation
from .resize import resize_image, resize_to_multiple
from .segmentation import fit_histogram_gmm, sobel_magnitude, weak_segment
from .sampling import dominant_fraction, select_patches, uniform_count, uniform_patches
from .builder import build_costmap
from .storage import costmap_to_pgm_values, write_costmap
