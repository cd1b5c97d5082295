import numpy as np
import pytest

from vnu.frames import SimilarityFrame
from vnu.grid import GridSpec


@pytest.fixture
def frame():
    return SimilarityFrame(alpha=1.6, beta=1.2, q_exp=1.25)


@pytest.fixture
def small_grid():
    """Cheap grid for unit tests; resolves sigma >= 0.35 features in B_2."""
    return GridSpec(box_halfwidth=8.0, n=128, nr=256)


@pytest.fixture
def medium_grid():
    return GridSpec(box_halfwidth=8.0, n=256, nr=512)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
