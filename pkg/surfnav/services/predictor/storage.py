"""
Versioned flat binary model file.

Layout (little-endian):

    magic       4 bytes  b"SNRM"
    version     uint32
    dims        7 x uint32  patch_size, image_features, velocity_features,
                            image_hidden, velocity_hidden, head_hidden, outputs
    parameters  float64     W1, b1, W2, b2, W3, b3, W4, b4 (row-major)
    statistics  float64     image mean/std, velocity mean/std, label mean/std
    cost        float64     W diagonal (4), c_ref
"""
import struct
from pathlib import Path
from typing import Tuple

import numpy as np

from surfnav.config.settings import MODEL_FILE_MAGIC, MODEL_FILE_VERSION
from surfnav.exceptions import ModelFormatError, ModelNotTrainedError
from surfnav.utils.logging.logger import get_logger
from .cost import CostModel
from .implementation import LABEL_DIM, PARAMETER_ORDER, TwoStreamRegressor

logger = get_logger(__name__)

_HEADER = struct.Struct("<4sI7I")
_STAT_NAMES = ("image_mean", "image_std", "vel_mean", "vel_std", "label_mean", "label_std")


def save_model(path: Path, model: TwoStreamRegressor, cost_model: CostModel) -> Path:
    """Write a trained model and its cost normalization."""
    if not model.is_trained:
        raise ModelNotTrainedError("cannot save a model without normalization statistics")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    params = model.parameters()
    chunks = [_HEADER.pack(MODEL_FILE_MAGIC, MODEL_FILE_VERSION, *model.dims)]
    chunks += [np.ascontiguousarray(params[name], dtype="<f8").tobytes() for name in PARAMETER_ORDER]
    chunks += [np.asarray(getattr(model, name), dtype="<f8").tobytes() for name in _STAT_NAMES]
    chunks.append(np.asarray(cost_model.weights, dtype="<f8").tobytes())
    chunks.append(np.asarray([cost_model.c_ref], dtype="<f8").tobytes())
    path.write_bytes(b"".join(chunks))
    logger.info(f"saved model ({model.parameter_count()} parameters) to {path}")
    return path


def load_model(path: Path) -> Tuple[TwoStreamRegressor, CostModel]:
    """
    Read a model file written by ``save_model``.

    Raises:
        ModelFormatError: missing file, bad magic, unknown version or truncation
    """
    path = Path(path)
    if not path.exists():
        raise ModelFormatError(f"model file {path} does not exist")
    data = path.read_bytes()
    if len(data) < _HEADER.size:
        raise ModelFormatError(f"model file {path} is truncated")
    magic, version, *dims = _HEADER.unpack_from(data)
    if magic != MODEL_FILE_MAGIC:
        raise ModelFormatError(f"{path} is not a model file (magic {magic!r})")
    if version != MODEL_FILE_VERSION:
        raise ModelFormatError(f"unsupported model file version {version}")

    patch_size, image_dim, vel_dim, image_hidden, vel_hidden, head_hidden, outputs = dims
    if outputs != LABEL_DIM:
        raise ModelFormatError(f"model predicts {outputs} values, expected {LABEL_DIM}")
    model = TwoStreamRegressor(
        patch_size=patch_size, image_hidden=image_hidden, velocity_hidden=vel_hidden, head_hidden=head_hidden
    )
    params = model.parameters()
    if params["W1"].shape[1] != image_dim or params["W2"].shape[1] != vel_dim:
        raise ModelFormatError(f"feature sizes ({image_dim}, {vel_dim}) do not match this build")

    stat_sizes = (image_dim, image_dim, vel_dim, vel_dim, outputs, outputs)
    total = sum(params[name].size for name in PARAMETER_ORDER) + sum(stat_sizes) + LABEL_DIM + 1
    if len(data) != _HEADER.size + 8 * total:
        raise ModelFormatError(f"model file {path} has {len(data)} bytes, expected {_HEADER.size + 8 * total}")

    values = np.frombuffer(data, dtype="<f8", offset=_HEADER.size).astype(float)
    offset = 0
    for name in PARAMETER_ORDER:
        size = params[name].size
        params[name][...] = values[offset:offset + size].reshape(params[name].shape)
        offset += size
    for name, size in zip(_STAT_NAMES, stat_sizes):
        setattr(model, name, values[offset:offset + size].copy())
        offset += size
    weights = values[offset:offset + LABEL_DIM].copy()
    c_ref = float(values[offset + LABEL_DIM])
    return model, CostModel(weights=weights, c_ref=c_ref)
