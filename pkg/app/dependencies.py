"""
Shared providers for CLI commands: effective config, output directory,
trained model and scenario.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel

from surfnav.config.run_config import RunConfig, dump_run_config, load_run_config, resolve_scenario
from surfnav.services.predictor.cost import CostModel
from surfnav.services.predictor.implementation import TwoStreamRegressor
from surfnav.services.predictor.storage import load_model
from surfnav.services.world.models import ScenarioConfig
from surfnav.utils.logging.logger import attach_run_log, get_logger
from surfnav.utils.serialization import serialize_to_json

logger = get_logger(__name__)

SUMMARY_NAME = "summary.json"


def nested_overrides(values: Dict[str, Any]) -> Dict[str, Any]:
    """
    Turn dotted keys into a nested override mapping, skipping unset values.

    ``{"paths.model_file": "m.bin", "seed": None}`` -> ``{"paths": {"model_file": "m.bin"}}``
    """
    nested: Dict[str, Any] = {}
    for dotted, value in values.items():
        if value is None:
            continue
        keys = dotted.split(".")
        target = nested
        for key in keys[:-1]:
            target = target.setdefault(key, {})
        target[keys[-1]] = str(value) if isinstance(value, Path) else value
    return nested


@dataclass
class CommandContext:
    """Options of the top-level group, handed to every subcommand."""
    config_path: Optional[Path] = None
    overrides: Dict[str, Any] = field(default_factory=dict)

    def run_config(self, extra: Optional[Dict[str, Any]] = None) -> RunConfig:
        """Effective config: file, then group flags, then subcommand flags."""
        merged = {**self.overrides, **(extra or {})}
        return load_run_config(self.config_path, nested_overrides(merged))


def prepare_output(config: RunConfig) -> Path:
    """
    Create the output directory, dump the effective config into it and
    mirror logging into its ``run.log``; the entry point detaches it after
    reporting the outcome.
    """
    output_dir = Path(config.paths.output_dir)
    dump_run_config(config, output_dir)
    attach_run_log(output_dir)
    logger.info(f"writing outputs to {output_dir}")
    return output_dir


def get_trained_model(config: RunConfig) -> Tuple[TwoStreamRegressor, CostModel]:
    """Load the model file named by the config."""
    return load_model(Path(config.paths.model_file))


def get_scenario_config(config: RunConfig, name: Optional[str] = None) -> ScenarioConfig:
    """Scenario by name or file, with the run's physics constants applied."""
    scenario = resolve_scenario(name or config.paths.scenario)
    return scenario.model_copy(update={"physics": config.physics})


def write_summary(output_dir: Path, summary: BaseModel) -> Path:
    path = Path(output_dir) / SUMMARY_NAME
    path.write_text(serialize_to_json(summary.model_dump(mode="json"), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path
