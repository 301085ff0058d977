"""Shared fixtures: the worked example network and seeded random grid instances."""
from pathlib import Path
from typing import Callable, Dict, NamedTuple

import numpy as np
import pytest

from irts.services.network.loader import read_network
from irts.services.network.road_network import NetworkBuilder, PreferredPath, RoadNetwork
from irts.services.network.search import shortest_preferred_path
from irts.services.skyline.query import Query

DATA_DIR = Path(__file__).parent / "data"

# vertex ids of the worked example
S, V1, V2, D, T1, T2, T3, V4 = range(8)
FIGURE_BUDGET = 21.0
FIGURE_TASKS = {T1: 3.0, T2: 4.0, T3: 5.0}


class Instance(NamedTuple):
    net: RoadNetwork
    pref: PreferredPath
    tasks: Dict[int, float]
    budget: float
    query: Query


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def figure_network() -> RoadNetwork:
    return read_network(DATA_DIR / "figure1.net")


@pytest.fixture
def figure_coords_network() -> RoadNetwork:
    return read_network(DATA_DIR / "figure1_coords.net")


@pytest.fixture
def figure_query(figure_network) -> Query:
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    return Query(figure_network, pref, dict(FIGURE_TASKS), FIGURE_BUDGET)


def make_random_instance(seed: int, budget_factor: float = 1.5) -> Instance:
    """
    A 3x3 or 3x4 grid with integer edge costs in [8, 12] (sums stay exact),
    positions 8 apart, and one to four tasks on intersections other than s and d.
    """
    rng = np.random.default_rng(seed)
    rows, cols = 3, int(rng.integers(3, 5))
    builder = NetworkBuilder()
    n = rows * cols
    vertices = list(range(n))
    s, d = (int(v) for v in rng.choice(vertices, size=2, replace=False))
    others = [v for v in vertices if v not in (s, d)]
    num_tasks = int(rng.integers(1, 5))
    task_ids = sorted(int(t) for t in rng.choice(others, size=num_tasks, replace=False))
    tasks = {t: float(rng.integers(1, 6)) for t in task_ids}

    for v in vertices:
        r, c = divmod(v, cols)
        builder.add_vertex(v, (8.0 * c, 8.0 * r), tasks.get(v, 0.0))
    for v in vertices:
        r, c = divmod(v, cols)
        if c + 1 < cols:
            builder.add_edge(v, v + 1, float(rng.integers(8, 13)))
        if r + 1 < rows:
            builder.add_edge(v, v + cols, float(rng.integers(8, 13)))
    net = builder.build()

    pref = shortest_preferred_path(net, s, d)
    budget = budget_factor * pref.total_cost
    return Instance(net, pref, tasks, budget, Query(net, pref, tasks, budget))


@pytest.fixture
def random_instance() -> Callable[..., Instance]:
    return make_random_instance
