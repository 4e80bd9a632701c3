"""
Run configuration for every surfnav command.

Precedence (highest first): explicit overrides (CLI flags), config file
values, ``SURFNAV_*`` environment variables / ``.env``, field defaults.
"""
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import simplejson as json
import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from surfnav.config.settings import DEFAULT_JOBS, DEFAULT_SEED
from surfnav.exceptions import ConfigurationError
from surfnav.services.collection.models import CollectionConfig
from surfnav.services.costmap.models import SamplingConfig
from surfnav.services.evaluation.models import EvaluationConfig
from surfnav.services.evaluation.suite import get_scenario
from surfnav.services.planner.params import PlannerParams
from surfnav.services.predictor.cost import CostConfig
from surfnav.services.predictor.training import TrainingConfig
from surfnav.services.world.library import library_surfaces
from surfnav.services.world.models import CameraModel, PhysicsParams, ScenarioConfig

CONFIG_SUFFIXES = (".yaml", ".yml", ".json")
EFFECTIVE_CONFIG_NAME = "effective_config.json"


class PathsConfig(BaseModel):
    """Where inputs come from and outputs go."""
    scenario: str = Field("scenario-1", description="Built-in scenario name or scenario file")
    dataset_dir: str = Field("out/dataset", description="Dataset directory")
    model_file: str = Field("out/model.bin", description="Trained model file")
    output_dir: str = Field("out", description="Directory for command outputs")


class RunConfig(BaseSettings):
    """All parameter groups of a run."""
    paths: PathsConfig = Field(default_factory=PathsConfig)
    seed: int = Field(DEFAULT_SEED, description="Global seed")
    jobs: int = Field(DEFAULT_JOBS, ge=1, description="Worker cap for independent trials")
    camera: CameraModel = Field(default_factory=CameraModel)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    cost: CostConfig = Field(default_factory=CostConfig)
    training: TrainingConfig = Field(default_factory=TrainingConfig)
    collection: CollectionConfig = Field(default_factory=CollectionConfig)
    physics: PhysicsParams = Field(default_factory=PhysicsParams)
    planner: PlannerParams = Field(default_factory=PlannerParams)
    evaluation: EvaluationConfig = Field(default_factory=EvaluationConfig)

    model_config = SettingsConfigDict(
        env_prefix="SURFNAV_",
        env_nested_delimiter="__",
        env_file=".env",
        extra="ignore",
    )

    @model_validator(mode="after")
    def propagate_seed(self):
        """The global seed drives every seeded component."""
        self.training = self.training.model_copy(update={"seed": self.seed})
        self.sampling = self.sampling.model_copy(update={"seed": self.seed})
        return self


def _deep_merge(base: Dict[str, Any], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def read_config_file(path: Path) -> Dict[str, Any]:
    """
    Parse a YAML or JSON config file into a dict.

    Raises:
        ConfigurationError: missing file, unknown suffix or unparsable content
    """
    path = Path(path)
    if path.suffix.lower() not in CONFIG_SUFFIXES:
        raise ConfigurationError(f"config file must be one of {', '.join(CONFIG_SUFFIXES)}: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    try:
        data = json.loads(text) if path.suffix.lower() == ".json" else yaml.safe_load(text)
    except (ValueError, yaml.YAMLError) as e:
        raise ConfigurationError(f"cannot parse config file {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"config file {path} must hold a mapping at the top level")
    return data


def load_run_config(path: Optional[Path] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """
    Build the effective RunConfig from a file and flag overrides.

    Args:
        path: Optional YAML/JSON config file
        overrides: Nested mapping of values that win over the file

    Raises:
        ConfigurationError: unreadable file, unknown top-level keys or invalid values
    """
    data = read_config_file(path) if path is not None else {}
    unknown = sorted(set(data) - set(RunConfig.model_fields))
    if unknown:
        raise ConfigurationError(f"unknown config keys: {', '.join(unknown)}")
    data = _deep_merge(data, overrides or {})
    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise ConfigurationError(f"invalid run configuration: {e}") from e


def dump_run_config(config: RunConfig, directory: Path) -> Path:
    """Write the effective config as JSON; it reloads to an identical RunConfig."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / EFFECTIVE_CONFIG_NAME
    path.write_text(json.dumps(config.model_dump(mode="json"), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def load_scenario_file(path: Path) -> ScenarioConfig:
    """
    Read a scenario description from YAML or JSON.

    Entries of ``surfaces`` may be built-in library names instead of full
    surface descriptions.

    Raises:
        ConfigurationError: unreadable file or invalid scenario
    """
    data = read_config_file(path)
    surfaces = data.get("surfaces") or []
    try:
        data["surfaces"] = [library_surfaces([s])[0] if isinstance(s, str) else s for s in surfaces]
    except KeyError as e:
        raise ConfigurationError(f"invalid scenario {path}: {e}") from e
    try:
        return ScenarioConfig(**data)
    except ValidationError as e:
        raise ConfigurationError(f"invalid scenario {path}: {e}") from e


def resolve_scenario(name_or_path: str) -> ScenarioConfig:
    """
    A built-in scenario by name, or a scenario file when the value names one.

    Raises:
        ScenarioNotFoundError: neither a built-in name nor a config file
    """
    path = Path(name_or_path)
    if path.suffix.lower() in CONFIG_SUFFIXES:
        return load_scenario_file(path)
    return get_scenario(name_or_path)
