"""
Autonomous data collection and self-supervised labels.
"""
from .models import CollectionConfig, CollectionResult, ManeuverPlan, Sample
from .maneuvers import all_maneuvers, band_limits, generate_maneuver, velocity_grid_coverage
from .labels import OdomDeltas, make_label, odom_errors, pca_variances, pose_deltas
from .collector import collect_dataset, collect_surfaces, patch_window, surface_world
from .dataset import iter_dataset, load_dataset, save_dataset, shuffle_samples, surface_counts
