"""
Interface for surface regressors.
"""
from abc import ABC, abstractmethod
from typing import Dict, Tuple

import numpy as np


class SurfaceRegressor(ABC):
    """
    Maps (image features, velocity features) to a nonnegative label estimate.

    Networks work in standardized feature and label space; ``predict``
    handles the conversion in both directions.
    """

    @property
    @abstractmethod
    def is_trained(self) -> bool:
        """Whether normalization statistics have been fixed."""
        pass

    @abstractmethod
    def set_normalization(self, image_x: np.ndarray, vel_x: np.ndarray, labels: np.ndarray) -> None:
        """
        Freeze feature and label standardization statistics.

        Args:
            image_x: (m, 11) raw image features
            vel_x: (m, 6) raw velocity features
            labels: (m, 4) raw labels
        """
        pass

    @abstractmethod
    def standardize(self, image_x: np.ndarray, vel_x: np.ndarray, labels: np.ndarray = None):
        """Apply the frozen statistics; returns (image_z, vel_z[, labels_z])."""
        pass

    @abstractmethod
    def forward(self, image_z: np.ndarray, vel_z: np.ndarray) -> np.ndarray:
        """Outputs in standardized label space, shape (m, 4)."""
        pass

    @abstractmethod
    def loss_and_gradients(
        self, image_z: np.ndarray, vel_z: np.ndarray, labels_z: np.ndarray
    ) -> Tuple[float, Dict[str, np.ndarray]]:
        """
        Mean squared error on standardized labels and its parameter gradients.

        Returns:
            (loss, gradients keyed like ``parameters()``)
        """
        pass

    @abstractmethod
    def parameters(self) -> Dict[str, np.ndarray]:
        """Trainable arrays by name (live references)."""
        pass

    @abstractmethod
    def predict_batch(self, image_x: np.ndarray, vel_x: np.ndarray) -> np.ndarray:
        """
        Destandardized, elementwise nonnegative predictions for raw features.

        Raises:
            ModelNotTrainedError: normalization statistics were never set
        """
        pass
