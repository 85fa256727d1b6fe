import random

import pytest

from qshear.torus import SkewForm


@pytest.fixture
def rng():
    return random.Random(20240229)


def random_skew_form(rng, n):
    beta = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-2, 2)
            beta[i][j] = v
            beta[j][i] = -v
    return SkewForm(tuple(f"g{i}" for i in range(n)), beta)
