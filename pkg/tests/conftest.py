import numpy as np
import pytest

from curvshell.geometry import PinchSpec, SpaceCurvature

FLAT = SpaceCurvature.flat()
SPHERE = SpaceCurvature.spherical(1.0)
HYPER = SpaceCurvature.hyperbolic(1.0)
SPACES = [FLAT, SPHERE, HYPER]


def rng_for(seed):
    return np.random.Generator(np.random.Philox(key=seed))


def random_pinch(space, rng, max_log_ratio=0.6):
    """Random admissible pinching with kappa2/kappa1 up to ~10**max_log_ratio."""
    if space.kind == "hyperbolic":
        kappa1 = space.k * (1.0 + 10.0 ** rng.uniform(-1.5, 0.5))
    else:
        kappa1 = 10.0 ** rng.uniform(-0.5, 0.7)
    ratio = 1.0 + 10.0 ** rng.uniform(-2.0, max_log_ratio)
    return PinchSpec.from_curvatures(space, kappa1, kappa1 * ratio)


@pytest.fixture
def rng():
    return rng_for(20240817)
