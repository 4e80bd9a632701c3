"""
Factory for creating surface regressor instances.
"""
from .interface import SurfaceRegressor
from .implementation import TwoStreamRegressor


class RegressorFactory:
    """
    Factory for creating surface regressor instances.
    """

    @staticmethod
    def create_regressor(patch_size: int = 50, seed: int = 0) -> SurfaceRegressor:
        """
        Create an untrained regressor.

        Args:
            patch_size: Patch side n the features are computed at
            seed: Seed of the weight initialization

        Returns:
            Surface regressor instance
        """
        return TwoStreamRegressor(patch_size=patch_size, seed=seed)
