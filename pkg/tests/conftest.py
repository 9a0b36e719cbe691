import random

import pytest

from convex_census.constructions import random_pslg


def random_suite(count: int, seed: int = 2024, max_n: int = 10):
    """Random valid graphs with n <= max_n: triangulations and thinned ones."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(3, max_n)
        keep = (1.0, 0.9, 0.7, 0.5)[i % 4]
        out.append(random_pslg(n, rng, coord_range=20, keep=keep))
    return out


@pytest.fixture(scope="session")
def suite():
    return random_suite(120)
