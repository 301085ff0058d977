"""
Brute-force reference solvers for small instances.

Walks (not simple paths) are enumerated depth first; revisits are allowed and
termination follows from positive edge costs under a finite travel cap. Branches
are cut once travel plus the shortest remaining distance to the target exceeds
the cap, which never loses a walk that could still finish within it.
"""
from typing import List, Mapping, Optional, Tuple
import logging

from pydantic import BaseModel, Field

from irts.core.config import EPS, settings
from irts.core.errors import OracleLimitExceeded
from irts.services.network.road_network import PreferredPath, RoadNetwork
from irts.services.network.search import shortest_travel_costs
from irts.services.skyline.skyline_set import SkylinePoint, SkylineSet

logger = logging.getLogger(__name__)


class OracleLimits(BaseModel):
    """Enumeration caps; exceeding any of them raises, results are never truncated."""
    max_vertices: int = Field(default_factory=lambda: settings.ORACLE_MAX_VERTICES, ge=1)
    max_tasks: int = Field(default_factory=lambda: settings.ORACLE_MAX_TASKS, ge=0)
    max_paths: int = Field(default_factory=lambda: settings.ORACLE_MAX_PATHS, ge=1)


def _refuse(message: str) -> OracleLimitExceeded:
    logger.warning(f"Oracle refused: {message}")
    return OracleLimitExceeded(message)


def _check_size(net: RoadNetwork, num_tasks: int, limits: OracleLimits) -> None:
    if net.num_vertices > limits.max_vertices:
        raise _refuse(f"network has {net.num_vertices} vertices, oracle limit is {limits.max_vertices}")
    if num_tasks > limits.max_tasks:
        raise _refuse(f"{num_tasks} tasks given, oracle limit is {limits.max_tasks}")


class _WalkCounter:
    def __init__(self, cap: int):
        self.cap = cap
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.cap:
            raise _refuse(f"more than {self.cap} walks enumerated")


def _enumerate_walks(
    net: RoadNetwork,
    pref: PreferredPath,
    origin: int,
    target: int,
    cap: float,
    counter: _WalkCounter,
):
    """Yield (vertices, detour, travel) for every walk origin -> target with travel <= cap."""
    to_target = shortest_travel_costs(net, target, cutoff=cap + EPS)
    if origin not in to_target:
        return
    walk: List[int] = [origin]

    def visit(v: int, detour: float, travel: float):
        counter.tick()
        if v == target:
            yield tuple(walk), detour, travel
        for u, cost in net.adjacency[v]:
            remaining = to_target.get(u)
            if remaining is None or travel + cost + remaining > cap + EPS:
                continue
            walk.append(u)
            yield from visit(u, detour + pref.edge_detour(v, u, cost), travel + cost)
            walk.pop()

    yield from visit(origin, 0.0, 0.0)


def brute_skyline(
    net: RoadNetwork,
    pref: PreferredPath,
    tasks: Mapping[int, float],
    b: float,
    limits: Optional[OracleLimits] = None,
) -> SkylineSet:
    limits = limits or OracleLimits()
    _check_size(net, len(tasks), limits)
    s, d = pref.source, pref.destination
    counter = _WalkCounter(limits.max_paths)

    candidates: List[SkylinePoint] = []
    for vertices, detour, travel in _enumerate_walks(net, pref, s, d, b, counter):
        reward = sum(tasks[t] for t in set(vertices) if t in tasks)
        if reward > 0:
            candidates.append(SkylinePoint(detour, travel, reward, vertices))

    sky = SkylineSet.from_points(candidates, source=s, destination=d, budget=b)
    logger.info(f"oracle: {counter.count} walks, {len(candidates)} candidates, {len(sky)} skyline points")
    return sky


def brute_min_detour_leg(
    net: RoadNetwork,
    pref: PreferredPath,
    a: int,
    b_node: int,
    budget_cap: float,
    limits: Optional[OracleLimits] = None,
) -> Optional[Tuple[float, float]]:
    """Lexicographic minimum (detour, travel) over every walk a -> b_node within budget_cap."""
    limits = limits or OracleLimits()
    _check_size(net, 0, limits)
    net.require(a, b_node)
    counter = _WalkCounter(limits.max_paths)
    best: Optional[Tuple[float, float]] = None
    for _, detour, travel in _enumerate_walks(net, pref, a, b_node, budget_cap, counter):
        if best is None or (detour, travel) < best:
            best = (detour, travel)
    return best
