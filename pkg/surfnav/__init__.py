"""
Surface-aware navigation: self-supervised surface costs fused with a
dynamic window planner, exercised on simulated multi-surface worlds.
"""

__version__ = "0.1.0"
