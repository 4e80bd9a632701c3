"""
Online mini-batch SGD for surface regressors.
"""
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from surfnav.exceptions import InsufficientDataError, TrainingDivergedError
from surfnav.utils.logging.logger import get_logger
from .cost import CostConfig, CostModel, fit_cost_model
from .features import extract_features
from .interface import SurfaceRegressor

if TYPE_CHECKING:
    from surfnav.services.collection.models import Sample

logger = get_logger(__name__)


class TrainingConfig(BaseModel):
    """Optimizer and schedule of online training."""
    learning_rate: float = Field(1e-2, gt=0.0)
    momentum: float = Field(0.9, ge=0.0, lt=1.0)
    batch_size: int = Field(32, ge=1)
    warmup: int = Field(256, ge=2, description="Buffered samples before training starts")
    heldout_fraction: float = Field(0.1, gt=0.0, lt=1.0)
    round_size: int = Field(128, ge=1, description="New samples between training rounds")
    epochs_per_round: int = Field(2, ge=1)
    final_epochs: int = Field(60, ge=0, description="Epochs over the full buffer once the stream ends")
    divergence_factor: float = Field(10.0, gt=1.0)
    divergence_patience: int = Field(3, ge=1)
    seed: int = 0


@dataclass
class LossRecord:
    step: int
    epoch: int
    samples: int
    train_loss: float
    heldout_loss: float


@dataclass
class TrainingReport:
    """Outcome of one training run."""
    model: SurfaceRegressor
    cost_model: CostModel
    curve: List[LossRecord] = field(default_factory=list)
    initial_heldout_loss: float = float("nan")
    final_heldout_loss: float = float("nan")
    n_train: int = 0
    n_heldout: int = 0


class OnlineTrainer:
    """
    Buffers incoming samples and trains in rounds as the buffer grows.

    Normalization statistics are frozen on the warm-up buffer. Each arriving
    sample is routed to the held-out split with probability
    ``heldout_fraction`` using a seeded generator.
    """

    def __init__(self, model: SurfaceRegressor, config: TrainingConfig):
        self.model = model
        self.config = config
        self._split_rng = np.random.default_rng([config.seed, 1])
        self._batch_rng = np.random.default_rng([config.seed, 2])
        self._image: List[np.ndarray] = []
        self._vel: List[np.ndarray] = []
        self._labels: List[np.ndarray] = []
        self._heldout: List[bool] = []
        self._velocity_state: Dict[str, np.ndarray] = {
            name: np.zeros_like(p) for name, p in model.parameters().items()
        }
        self._initial_params: Optional[Dict[str, np.ndarray]] = None
        self._since_round = 0
        self._strikes = 0
        self.epoch = 0
        self.curve: List[LossRecord] = []

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def started(self) -> bool:
        return self._initial_params is not None

    def add(self, image_x: np.ndarray, vel_x: np.ndarray, label: np.ndarray) -> None:
        self._image.append(np.asarray(image_x, dtype=float))
        self._vel.append(np.asarray(vel_x, dtype=float))
        self._labels.append(np.asarray(label, dtype=float))
        self._heldout.append(bool(self._split_rng.random() < self.config.heldout_fraction))
        self._since_round += 1

        if not self.started and len(self) >= self.config.warmup:
            self._start()
        elif self.started and self._since_round >= self.config.round_size:
            self.run_epochs(self.config.epochs_per_round)

    def _start(self) -> None:
        self._ensure_split()
        image, vel, labels = self._arrays()
        self.model.set_normalization(image, vel, labels)
        self._initial_params = {name: p.copy() for name, p in self.model.parameters().items()}
        logger.info(f"training started with {len(self)} buffered samples")
        self.run_epochs(self.config.epochs_per_round)

    def _ensure_split(self) -> None:
        # both splits need at least one sample
        if not any(self._heldout):
            self._heldout[-1] = True
        if all(self._heldout):
            self._heldout[0] = False

    def _arrays(self, mask: Optional[np.ndarray] = None):
        image = np.array(self._image)
        vel = np.array(self._vel)
        labels = np.array(self._labels)
        if mask is None:
            return image, vel, labels
        return image[mask], vel[mask], labels[mask]

    def _split_masks(self):
        heldout = np.array(self._heldout)
        return ~heldout, heldout

    def heldout_loss(self, params: Optional[Dict[str, np.ndarray]] = None) -> float:
        """MSE on the held-out split in standardized label space."""
        _, heldout = self._split_masks()
        image_z, vel_z, labels_z = self.model.standardize(*self._arrays(heldout))
        if params is None:
            return float(np.mean((self.model.forward(image_z, vel_z) - labels_z) ** 2))
        current = {name: p.copy() for name, p in self.model.parameters().items()}
        self._assign(params)
        try:
            return float(np.mean((self.model.forward(image_z, vel_z) - labels_z) ** 2))
        finally:
            self._assign(current)

    def initial_heldout_loss(self) -> float:
        return self.heldout_loss(self._initial_params)

    def _assign(self, values: Dict[str, np.ndarray]) -> None:
        for name, p in self.model.parameters().items():
            p[...] = values[name]

    def run_epochs(self, epochs: int) -> None:
        """Mini-batch SGD with momentum over the current training split."""
        if not self.started:
            raise InsufficientDataError(
                f"training needs {self.config.warmup} samples before it can start, have {len(self)}"
            )
        self._ensure_split()
        train, _ = self._split_masks()
        image_z, vel_z, labels_z = self.model.standardize(*self._arrays(train))
        params = self.model.parameters()
        cfg = self.config

        for _ in range(epochs):
            order = self._batch_rng.permutation(labels_z.shape[0])
            losses = []
            for start in range(0, order.size, cfg.batch_size):
                batch = order[start:start + cfg.batch_size]
                loss, grads = self.model.loss_and_gradients(image_z[batch], vel_z[batch], labels_z[batch])
                for name, p in params.items():
                    velocity = self._velocity_state[name]
                    velocity *= cfg.momentum
                    velocity -= cfg.learning_rate * grads[name]
                    p += velocity
                losses.append(loss)
                self.model.step_count += 1
            self.epoch += 1
            self._evaluate(float(np.mean(losses)))
        self._since_round = 0

    def _evaluate(self, train_loss: float) -> None:
        heldout = self.heldout_loss()
        initial = self.initial_heldout_loss()
        self.curve.append(LossRecord(
            step=self.model.step_count,
            epoch=self.epoch,
            samples=len(self),
            train_loss=train_loss,
            heldout_loss=heldout,
        ))
        if not np.isfinite(heldout) or heldout > self.config.divergence_factor * initial:
            self._strikes += 1
            logger.warning(
                f"held-out loss {heldout:.4g} exceeds {self.config.divergence_factor}x initial {initial:.4g} "
                f"({self._strikes}/{self.config.divergence_patience})"
            )
            if self._strikes >= self.config.divergence_patience:
                raise TrainingDivergedError(
                    f"held-out loss diverged to {heldout:.4g} (initial {initial:.4g}) at epoch {self.epoch}"
                )
        else:
            self._strikes = 0

    def finish(self, cost_config: CostConfig) -> TrainingReport:
        """Run the final epochs and fit the cost normalization."""
        if not self.started:
            raise InsufficientDataError(
                f"stream ended with {len(self)} samples, below the warm-up size {self.config.warmup}"
            )
        if self.config.final_epochs:
            self.run_epochs(self.config.final_epochs)
        train, heldout = self._split_masks()
        image, vel, _ = self._arrays(train)
        cost_model = fit_cost_model(self.model.predict_batch(image, vel), cost_config)
        report = TrainingReport(
            model=self.model,
            cost_model=cost_model,
            curve=list(self.curve),
            initial_heldout_loss=self.initial_heldout_loss(),
            final_heldout_loss=self.heldout_loss(),
            n_train=int(train.sum()),
            n_heldout=int(heldout.sum()),
        )
        logger.info(
            f"training finished: held-out loss {report.initial_heldout_loss:.4g} -> "
            f"{report.final_heldout_loss:.4g}, c_ref={cost_model.c_ref:.4g}"
        )
        return report


def train_online(
    model: SurfaceRegressor,
    samples: Iterable["Sample"],
    config: TrainingConfig,
    cost_config: Optional[CostConfig] = None,
    patch_size: int = 50,
) -> TrainingReport:
    """
    Train on a sample stream, interleaving rounds with buffer growth.

    Args:
        model: Regressor to train in place
        samples: Stream of samples (e.g. a dataset reader or a live collector)
        config: Training configuration
        cost_config: Weights and percentile for the cost normalization
        patch_size: Patch side n used for feature extraction

    Returns:
        TrainingReport with the loss curve and the fitted cost model

    Raises:
        InsufficientDataError: fewer samples than the warm-up size
        TrainingDivergedError: held-out loss diverged
    """
    def rows():
        for sample in samples:
            features = extract_features(sample.patch, sample.vel_hist, patch_size)
            yield features.image, features.velocity, sample.label

    return train_on_features(model, rows(), config, cost_config)


def train_on_features(
    model: SurfaceRegressor,
    rows: Iterable[Tuple[np.ndarray, np.ndarray, np.ndarray]],
    config: TrainingConfig,
    cost_config: Optional[CostConfig] = None,
) -> TrainingReport:
    """Same schedule as ``train_online`` for a stream of (image features, velocity features, label) rows."""
    trainer = OnlineTrainer(model, config)
    for image_row, vel_row, label in rows:
        trainer.add(image_row, vel_row, label)
    return trainer.finish(cost_config or CostConfig())
