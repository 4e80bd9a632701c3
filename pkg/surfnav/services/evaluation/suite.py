"""
Built-in evaluation scenarios.

Every scenario puts the goal 12 m straight ahead of the start. Trained
surfaces are the library's default training pool unless a scenario says
otherwise.
"""
from typing import Callable, Dict, List, Optional, Sequence

from surfnav.exceptions import EmptySuiteError, ScenarioNotFoundError
from surfnav.services.world.library import SURFACE_LIBRARY, TRAINED_SURFACES, library_surfaces
from surfnav.services.world.models import Obstacle, RandomBlobs, Region, ScenarioConfig
from surfnav.utils.constants.enums import RegionShape
from .models import ScenarioSuite, SuiteEntry

_START = (2.0, 10.0, 0.0)
_GOAL = (14.0, 10.0)


def _ids(names: Sequence[str]) -> List[int]:
    return [SURFACE_LIBRARY[name].id for name in names]


def _rect(surface: str, x0: float, y0: float, x1: float, y1: float) -> Region:
    return Region(surface=SURFACE_LIBRARY[surface].id, shape=RegionShape.RECT, bounds=(x0, y0, x1, y1))


def flat_scenario() -> ScenarioConfig:
    """Single smooth surface, goal 5 m ahead."""
    return ScenarioConfig(
        name="flat",
        surfaces=library_surfaces(["concrete"]),
        start=_START,
        goal=(7.0, 10.0),
        trained_surfaces=_ids(["concrete"]),
    )


def scenario_smooth_bumpy() -> ScenarioConfig:
    """Trained smooth ground with a trained bumpy patch across the direct path."""
    return ScenarioConfig(
        name="scenario-1",
        surfaces=library_surfaces(["concrete", "grass"]),
        regions=[_rect("grass", 6.0, 8.0, 10.0, 12.0)],
        start=_START,
        goal=_GOAL,
        trained_surfaces=_ids(["concrete", "grass"]),
    )


def scenario_trained_mix() -> ScenarioConfig:
    """Several trained surfaces in sequence with a pair of obstacles."""
    return ScenarioConfig(
        name="scenario-2",
        surfaces=library_surfaces(["asphalt", "tiles", "leaves"]),
        regions=[
            _rect("tiles", 5.0, 7.0, 8.0, 13.0),
            Region(surface=SURFACE_LIBRARY["leaves"].id, shape=RegionShape.BLOB, center=(11.0, 10.5), radius=1.8),
        ],
        obstacles=[Obstacle(x=9.0, y=12.5, radius=0.4), Obstacle(x=9.0, y=7.5, radius=0.4)],
        start=_START,
        goal=_GOAL,
        trained_surfaces=_ids(["asphalt", "tiles", "leaves"]),
    )


def scenario_mud_strip() -> ScenarioConfig:
    """A high-slip mud strip across the direct path; the predictor must know mud."""
    return ScenarioConfig(
        name="scenario-3",
        surfaces=library_surfaces(["concrete", "mud"]),
        regions=[_rect("mud", 7.0, 7.0, 9.0, 13.0)],
        start=_START,
        goal=_GOAL,
        trained_surfaces=_ids(["concrete", "mud"]),
    )


def scenario_texture_shift() -> ScenarioConfig:
    """Scenario-1 layout with shifted textures (seasonal change of trained surfaces)."""
    shifted = [
        spec.model_copy(update={"texture": spec.texture.shifted((25, 10, -20), noise_scale=1.4)})
        for spec in library_surfaces(["concrete", "grass"])
    ]
    return ScenarioConfig(
        name="scenario-4",
        surfaces=shifted,
        regions=[_rect("grass", 6.0, 8.0, 10.0, 12.0)],
        start=_START,
        goal=_GOAL,
        trained_surfaces=_ids(["concrete", "grass"]),
    )


def scenario_untrained() -> ScenarioConfig:
    """Trained background with seeded blobs of surfaces the predictor never saw."""
    return ScenarioConfig(
        name="scenario-5",
        surfaces=library_surfaces(["asphalt", "rocks", "grass"]),
        random_blobs=RandomBlobs(count=6, surfaces=_ids(["rocks", "grass"]), radius_range=(0.8, 2.0)),
        start=_START,
        goal=_GOAL,
        trained_surfaces=_ids(["asphalt", "grass"]),
    )


BUILTIN_SCENARIOS: Dict[str, Callable[[], ScenarioConfig]] = {
    "flat": flat_scenario,
    "scenario-1": scenario_smooth_bumpy,
    "scenario-2": scenario_trained_mix,
    "scenario-3": scenario_mud_strip,
    "scenario-4": scenario_texture_shift,
    "scenario-5": scenario_untrained,
}


def get_scenario(name: str) -> ScenarioConfig:
    """
    Built-in scenario by name.

    Raises:
        ScenarioNotFoundError: unknown name (the message lists the available ones)
    """
    if name not in BUILTIN_SCENARIOS:
        raise ScenarioNotFoundError(name, sorted(BUILTIN_SCENARIOS))
    return BUILTIN_SCENARIOS[name]()


def trial_seeds(base_seed: int, scenario_index: int, trials: int) -> List[int]:
    """Distinct seeds for the trials of one scenario."""
    return [base_seed * 100_003 + scenario_index * 1_000 + i for i in range(trials)]


def build_suite(
    names: Sequence[str],
    trials: int,
    base_seed: int,
    configs: Optional[Dict[str, ScenarioConfig]] = None,
) -> ScenarioSuite:
    """
    Assemble a suite from built-in names or explicit scenario configs.

    Raises:
        ScenarioNotFoundError: unknown scenario name
        EmptySuiteError: the suite would hold no trials
    """
    configs = configs or {}
    entries = []
    for index, name in enumerate(names):
        config = configs[name] if name in configs else get_scenario(name)
        entries.append(SuiteEntry(name=name, config=config, seeds=trial_seeds(base_seed, index, trials)))
    suite = ScenarioSuite(entries=entries)
    if suite.total_trials == 0:
        raise EmptySuiteError("the evaluation suite has no trials")
    return suite


def training_surfaces_for(names: Sequence[str]) -> List[str]:
    """Default training pool plus any trained surface a scenario declares."""
    pool = list(TRAINED_SURFACES)
    by_id = {spec.id: key for key, spec in SURFACE_LIBRARY.items()}
    for name in names:
        for sid in get_scenario(name).trained_surfaces:
            if sid in by_id and by_id[sid] not in pool:
                pool.append(by_id[sid])
    return pool
