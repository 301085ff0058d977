"""
Scenario generation for the benchmark protocol.

The preferred path is a shortest travel path whose cost lies within the
configured tolerance of the target. Tasks are drawn from the feasible pool:
tasks t with shortest travel s->t plus t->d within the budget.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
import logging

import numpy as np

from irts.core.config import EPS, settings
from irts.core.errors import ScenarioGenerationError
from irts.schemas.bench import RewardDistribution, ScenarioConfig
from irts.services.network.road_network import PreferredPath, RoadNetwork
from irts.services.network.search import shortest_preferred_path, shortest_travel_costs

logger = logging.getLogger(__name__)


@dataclass
class Scenario:
    pref: PreferredPath
    tasks: Dict[int, float]
    budget: float
    config: ScenarioConfig
    groups: List[Tuple[int, ...]] = field(default_factory=list)  # one group per cluster

    def __iter__(self):
        return iter((self.pref, self.tasks, self.budget))

    @property
    def pref_cost(self) -> float:
        return self.pref.total_cost


def draw_rewards(rng: np.random.Generator, dist: RewardDistribution, n: int) -> List[float]:
    if dist is RewardDistribution.EQUAL:
        return [1.0] * n
    if dist is RewardDistribution.UNIFORM:
        return [float(r) for r in rng.integers(1, 21, size=n)]
    # shift keeps every reward strictly positive after rounding
    return [round(round(float(x), 2) + 0.01, 2) for x in rng.exponential(1.0, size=n)]


def _draw_endpoints(net: RoadNetwork, rng: np.random.Generator, target: float) -> Tuple[int, int]:
    tolerance = settings.SCENARIO_COST_TOLERANCE * target
    lo, hi = target - tolerance, target + tolerance
    intersections = np.array(sorted(v for v in net.vertices if v not in net.task_ids))
    if len(intersections) < 2:
        raise ScenarioGenerationError("network has fewer than two non-task vertices")

    for _ in range(settings.SCENARIO_MAX_DRAWS):
        s = int(rng.choice(intersections))
        reach = shortest_travel_costs(net, s, cutoff=hi)
        in_band = sorted(v for v, c in reach.items()
                         if v != s and v not in net.task_ids and lo - EPS <= c <= hi + EPS)
        if in_band:
            return s, int(rng.choice(in_band))
    raise ScenarioGenerationError(
        f"no shortest path within {settings.SCENARIO_COST_TOLERANCE:.0%} of {target:g} "
        f"after {settings.SCENARIO_MAX_DRAWS} source draws"
    )


def feasible_pool(net: RoadNetwork, pref: PreferredPath, b: float) -> List[int]:
    from_s = shortest_travel_costs(net, pref.source, cutoff=b)
    to_d = shortest_travel_costs(net, pref.destination, cutoff=b)
    return sorted(
        t for t in net.task_ids
        if t in from_s and t in to_d and from_s[t] + to_d[t] <= b + EPS
    )


def _clustered(net: RoadNetwork, pool: List[int], rng: np.random.Generator,
               num_tasks: int, clusters: int) -> List[Tuple[int, ...]]:
    """Centroids are drawn one at a time from the not yet chosen pool members."""
    remaining = set(pool)
    base, extra = divmod(num_tasks, clusters)
    groups: List[Tuple[int, ...]] = []
    for i in range(clusters):
        size = base + (1 if i < extra else 0)
        if size == 0 or not remaining:
            continue
        centroid = int(rng.choice(sorted(remaining)))
        dist = shortest_travel_costs(net, centroid)
        neighbours = sorted((dist[t], t) for t in remaining if t != centroid and t in dist)
        group = (centroid, *(t for _, t in neighbours[: size - 1]))
        remaining.difference_update(group)
        groups.append(group)
    return groups


def gen_scenario(net: RoadNetwork, cfg: ScenarioConfig) -> Scenario:
    rng = np.random.default_rng(cfg.seed)
    s, d = _draw_endpoints(net, rng, cfg.pref_cost_target)
    pref = shortest_preferred_path(net, s, d)
    b = cfg.budget_factor * pref.total_cost

    pool = feasible_pool(net, pref, b)
    if not pool:
        raise ScenarioGenerationError(f"no feasible task for {s}->{d} within budget {b:g}")

    groups: List[Tuple[int, ...]] = []
    if len(pool) <= cfg.num_tasks:
        chosen = pool
    elif cfg.clusters:
        groups = _clustered(net, pool, rng, cfg.num_tasks, cfg.clusters)
        chosen = sorted(t for group in groups for t in group)
    else:
        chosen = sorted(int(t) for t in rng.choice(pool, size=cfg.num_tasks, replace=False))

    rewards = draw_rewards(rng, cfg.reward_dist, len(chosen))
    tasks = dict(zip(chosen, rewards))
    logger.debug(f"Scenario seed={cfg.seed}: {s}->{d} cost {pref.total_cost:g}, "
                 f"{len(tasks)}/{len(pool)} tasks")
    return Scenario(pref, tasks, b, cfg, groups)
