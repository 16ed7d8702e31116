import random
from fractions import Fraction

import pytest
from hypothesis import settings

from skewrank.exterior import SkewTensor

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def random_tensor(rng: random.Random, dim: int = 6, box: int = 4) -> SkewTensor:
    n = dim * (dim - 1) // 2
    return SkewTensor(dim, tuple(Fraction(rng.randint(-box, box)) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240611)
