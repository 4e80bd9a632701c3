"""
Navigability cost: weighted norm of the predicted label, normalized to [0, pi/2].
"""
import math
from dataclasses import dataclass
from typing import List

import numpy as np
from pydantic import BaseModel, Field, field_validator

_MIN_REFERENCE = 1e-9


class CostConfig(BaseModel):
    """Weights of the label norm and the normalization percentile."""
    weights: List[float] = Field(default_factory=lambda: [1.0, 1.0, 1.0, 1.0], description="Diagonal of W")
    percentile: float = Field(99.0, gt=0.0, le=100.0)

    @field_validator("weights")
    @classmethod
    def validate_weights(cls, v):
        if len(v) != 4 or any(w <= 0.0 for w in v):
            raise ValueError("weights must be four positive numbers")
        return v


@dataclass(frozen=True)
class CostModel:
    weights: np.ndarray  # (4,) diagonal of W
    c_ref: float

    def __post_init__(self):
        if np.any(np.asarray(self.weights) <= 0.0):
            raise ValueError("cost weights must be positive")
        if not self.c_ref > 0.0:
            raise ValueError("c_ref must be positive")


def raw_cost(labels: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """sqrt(l^T W l) for one label (4,) or a batch (m, 4)."""
    labels = np.asarray(labels, dtype=float)
    return np.sqrt(np.sum(np.asarray(weights) * labels ** 2, axis=-1))


def navigability_cost(labels: np.ndarray, cost_model: CostModel):
    """
    Normalized cost min(c_raw / c_ref, 1) * pi/2.

    Returns a float for a single label and an array for a batch.
    """
    c_raw = raw_cost(labels, cost_model.weights)
    normalized = np.minimum(c_raw / cost_model.c_ref, 1.0) * (math.pi / 2.0)
    if np.ndim(normalized) == 0:
        return float(normalized)
    return normalized


def fit_cost_model(predicted: np.ndarray, config: CostConfig) -> CostModel:
    """Cost model whose c_ref is the configured percentile of the raw costs."""
    weights = np.asarray(config.weights, dtype=float)
    costs = raw_cost(np.atleast_2d(predicted), weights)
    c_ref = float(np.percentile(costs, config.percentile)) if costs.size else 0.0
    return CostModel(weights=weights, c_ref=max(c_ref, _MIN_REFERENCE))
