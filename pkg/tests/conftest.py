from pathlib import Path

import numpy as np
import pytest

from rmpower.rmanova import make_dataset

FIXTURES = Path(__file__).parent / "fixtures"

ONE_GROUP_ROWS = [
    [1.0, 1.2442, 1.6132, 1.2916, 1.2916],
    [1.0, 0.9640, 1.8748, 1.5555, 1.5555],
    [1.0, 0.9318, 0.8811, 0.9753, 0.5691],
    [1.0, 1.2502, 1.1113, 1.2712, 0.7921],
    [1.0, 1.9395, 1.4037, 1.5248, 0.9224],
]

GROUP2_ROWS = [
    [1.0, 1.1107, 0.5734, 0.7837, 0.7470],
    [1.0, 0.9328, 1.0583, 0.4739, 0.4917],
    [1.0, 1.0061, 1.4217, 0.6240, 0.6284],
    [1.0, 0.6884, 0.9345, 0.4775, 0.7082],
    [1.0, 0.1542, 0.6776, 0.4507, 0.1745],
]

GROUP3_ROWS = [
    [1.0, 0.1989, 0.1930, 1.1714, 0.6429],
    [1.0, 0.1593, 0.1111, 0.2740, 0.2158],
    [1.0, 0.1013, 0.3434, 0.0867, 0.0223],
    [1.0, 0.1489, 0.0604, 0.0837, 0.0678],
    [1.0, 0.4105, 0.2151, 0.0001, 0.0366],
]


@pytest.fixture
def one_group_dataset():
    return make_dataset([("g1", ONE_GROUP_ROWS)])


@pytest.fixture
def three_group_dataset():
    return make_dataset(
        [("g1", ONE_GROUP_ROWS), ("g2", GROUP2_ROWS), ("g3", GROUP3_ROWS)]
    )


@pytest.fixture
def one_group_csv_path():
    return FIXTURES / "one_group.csv"


@pytest.fixture
def three_groups_csv_path():
    return FIXTURES / "three_groups.csv"


def random_dataset(rng: np.random.Generator, groups=None, times=None, n_per=None):
    """Small random balanced dataset for property grids."""
    g = groups if groups is not None else int(rng.integers(1, 4))
    t = times if times is not None else int(rng.integers(2, 6))
    n = n_per if n_per is not None else int(rng.integers(3, 8))
    blocks = [
        (f"g{k + 1}", rng.normal(size=(n, t)) + rng.normal(scale=0.5, size=(1, t)))
        for k in range(g)
    ]
    return make_dataset(blocks)
