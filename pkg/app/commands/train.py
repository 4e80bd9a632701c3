"""
`train`: online training of the surface regressor on a saved dataset.
"""
import csv
from pathlib import Path

import click

from app.dependencies import CommandContext, prepare_output, write_summary
from app.schemas.reports import TrainingSummary
from surfnav.exceptions import InsufficientDataError
from surfnav.services.collection.dataset import load_dataset, shuffle_samples
from surfnav.services.predictor.factory import RegressorFactory
from surfnav.services.predictor.storage import save_model
from surfnav.services.predictor.training import train_online
from surfnav.utils.logging.logger import get_logger

logger = get_logger(__name__)

LOSS_CURVE_NAME = "loss_curve.csv"
LOSS_COLUMNS = ["step", "epoch", "samples", "train_loss", "heldout_loss"]


@click.command("train")
@click.option("--dataset", type=click.Path(file_okay=False, path_type=Path), default=None, help="Dataset directory")
@click.option("--model", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Model file to write")
@click.pass_obj
def train(obj: CommandContext, dataset, model):
    """Train on a dataset and write the model plus its loss curve."""
    config = obj.run_config({"paths.dataset_dir": dataset, "paths.model_file": model})
    output_dir = prepare_output(config)

    samples = load_dataset(Path(config.paths.dataset_dir))
    if not samples:
        raise InsufficientDataError(f"dataset {config.paths.dataset_dir} holds no samples")
    patch_size = int(samples[0].patch.shape[0])
    regressor = RegressorFactory.create_regressor(patch_size, config.seed)
    report = train_online(
        regressor, shuffle_samples(samples, config.seed), config.training, config.cost, patch_size
    )

    model_file = Path(config.paths.model_file)
    save_model(model_file, regressor, report.cost_model)

    curve_path = output_dir / LOSS_CURVE_NAME
    with open(curve_path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(LOSS_COLUMNS)
        for record in report.curve:
            writer.writerow([
                record.step, record.epoch, record.samples, repr(float(record.train_loss)), repr(float(record.heldout_loss)),
            ])

    write_summary(output_dir, TrainingSummary(
        model_file=str(model_file),
        n_train=report.n_train,
        n_heldout=report.n_heldout,
        initial_heldout_loss=report.initial_heldout_loss,
        final_heldout_loss=report.final_heldout_loss,
        c_ref=report.cost_model.c_ref,
        parameter_count=regressor.parameter_count(),
        loss_curve=LOSS_CURVE_NAME,
    ))
    logger.info(
        f"held-out loss {report.initial_heldout_loss:.4f} -> {report.final_heldout_loss:.4f}, model at {model_file}"
    )
