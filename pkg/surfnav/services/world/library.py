"""
Built-in surface classes.

Values are simulation choices: they order the surfaces the way their
navigability is usually ranked (smooth paving < tiles < leaves/grass < rocks,
with mud the only surface that can trap the robot).
"""
from typing import Dict, Iterable, List

from .models import SurfaceSpec, TextureSpec

SURFACE_LIBRARY: Dict[str, SurfaceSpec] = {
    "concrete": SurfaceSpec(
        id=1, name="concrete", slip_lin=0.0, slip_ang=0.0, bumpiness=0.002, deformability=0.0,
        texture=TextureSpec(color=(170, 170, 165), noise_amplitude=8.0, frequency=6.0),
    ),
    "asphalt": SurfaceSpec(
        id=2, name="asphalt", slip_lin=0.02, slip_ang=0.02, bumpiness=0.004, deformability=0.0,
        texture=TextureSpec(color=(70, 70, 75), noise_amplitude=10.0, frequency=8.0),
    ),
    "tiles": SurfaceSpec(
        id=3, name="tiles", slip_lin=0.04, slip_ang=0.05, bumpiness=0.010, deformability=0.0,
        texture=TextureSpec(color=(180, 110, 90), noise_amplitude=30.0, frequency=3.0),
    ),
    "leaves": SurfaceSpec(
        id=4, name="leaves", slip_lin=0.12, slip_ang=0.15, bumpiness=0.014, deformability=0.1,
        texture=TextureSpec(color=(200, 160, 60), noise_amplitude=45.0, frequency=10.0),
    ),
    "grass": SurfaceSpec(
        id=5, name="grass", slip_lin=0.15, slip_ang=0.20, bumpiness=0.020, deformability=0.05,
        texture=TextureSpec(color=(60, 140, 50), noise_amplitude=40.0, frequency=12.0),
    ),
    "rocks": SurfaceSpec(
        id=6, name="rocks", slip_lin=0.10, slip_ang=0.10, bumpiness=0.035, deformability=0.0,
        texture=TextureSpec(color=(125, 115, 105), noise_amplitude=60.0, frequency=5.0),
    ),
    "mud": SurfaceSpec(
        id=7, name="mud", slip_lin=0.70, slip_ang=0.60, bumpiness=0.008, deformability=0.8,
        texture=TextureSpec(color=(95, 65, 40), noise_amplitude=15.0, frequency=4.0),
    ),
}

# Surfaces the predictor is trained on by default
TRAINED_SURFACES: List[str] = ["concrete", "tiles", "grass", "asphalt", "leaves"]


def library_surfaces(names: Iterable[str]) -> List[SurfaceSpec]:
    """
    Look up library surfaces by name.

    Raises:
        KeyError: If a name is not in the library
    """
    specs = []
    for name in names:
        if name not in SURFACE_LIBRARY:
            raise KeyError(f"Unknown surface '{name}'. Available: {', '.join(SURFACE_LIBRARY)}")
        specs.append(SURFACE_LIBRARY[name])
    return specs


def surface_id(name: str) -> int:
    return SURFACE_LIBRARY[name].id
