"""
Point-to-point searches on the road network.

shortest_travel_path   single criterion (travel), via networkx Dijkstra
min_detour_path        label setting ordered lexicographically by (detour, travel)
euclidean_lower_bound  straight-line bound used by the exact solver's budget pruning
"""
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Dict, Iterable, Optional, Tuple
import logging
import math

import networkx as nx

from irts.core.config import EPS
from irts.core.errors import UnreachableError
from irts.services.network.road_network import PreferredPath, RoadNetwork

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DetourLeg:
    """A realized network path with its detour and travel cost."""
    path: Tuple[int, ...]
    detour: float
    travel: float


def shortest_travel_path(net: RoadNetwork, a: int, b: int) -> Tuple[Tuple[int, ...], float]:
    net.require(a, b)
    try:
        cost, path = nx.single_source_dijkstra(net.graph, a, b, weight="cost")
    except nx.NetworkXNoPath:
        raise UnreachableError(f"vertex {b} is unreachable from {a}") from None
    return tuple(path), float(cost)


def shortest_travel_costs(net: RoadNetwork, source: int, cutoff: Optional[float] = None) -> Dict[int, float]:
    """Travel cost from `source` to every vertex within `cutoff`."""
    net.require(source)
    return nx.single_source_dijkstra_path_length(net.graph, source, cutoff=cutoff, weight="cost")


def shortest_preferred_path(net: RoadNetwork, s: int, d: int) -> PreferredPath:
    path, _ = shortest_travel_path(net, s, d)
    return PreferredPath(net, path)


def _walk_back(pred: Dict[int, Optional[int]], v: int) -> Tuple[int, ...]:
    path = [v]
    while pred[path[-1]] is not None:
        path.append(pred[path[-1]])
    return tuple(reversed(path))


def min_detour_legs(
    net: RoadNetwork,
    origin: int,
    pref: PreferredPath,
    targets: Iterable[int],
    detour_cap: float = math.inf,
    required: Iterable[int] = (),
) -> Dict[int, DetourLeg]:
    """
    Single-source label setting in lexicographic (detour, travel) order.

    Labels settle in non-decreasing (detour, travel); the search stops once every
    target is settled, or once the settled detour exceeds `detour_cap` and all
    `required` targets are settled. Since travel >= detour, a target whose minimum
    detour exceeds the cap cannot have a leg within the cap either.
    """
    net.require(origin)
    remaining = set(targets) | set(required)
    needed = set(required)
    best: Dict[int, Tuple[float, float]] = {origin: (0.0, 0.0)}
    pred: Dict[int, Optional[int]] = {origin: None}
    settled = set()
    found: Dict[int, DetourLeg] = {}
    heap = [(0.0, 0.0, origin)]

    while heap and remaining:
        detour, travel, v = heappop(heap)
        if v in settled:
            continue
        if detour > detour_cap + EPS and not needed:
            break
        settled.add(v)
        if v in remaining:
            remaining.discard(v)
            needed.discard(v)
            found[v] = DetourLeg(_walk_back(pred, v), detour, travel)
        for u, cost in net.adjacency[v]:
            if u in settled:
                continue
            label = (detour + pref.edge_detour(v, u, cost), travel + cost)
            current = best.get(u)
            if current is None or label < current:
                best[u] = label
                pred[u] = v
                heappush(heap, (label[0], label[1], u))

    return found


def min_detour_path(
    net: RoadNetwork, a: int, b: int, pref: PreferredPath, budget_cap: float
) -> Optional[DetourLeg]:
    """
    Minimum-detour path from a to b (ties: minimum travel).
    Returns None when b is unreachable or the path's travel exceeds budget_cap.
    """
    net.require(b)
    leg = min_detour_legs(net, a, pref, [b], detour_cap=budget_cap).get(b)
    if leg is None or leg.travel > budget_cap + EPS:
        return None
    return leg


def euclidean_lower_bound(net: RoadNetwork, v: int, d: int) -> float:
    """Straight-line distance, or 0 when either position is unknown."""
    if v == d:
        return 0.0
    cv, cd = net.coord(v), net.coord(d)
    if cv is None or cd is None:
        return 0.0
    return math.dist(cv, cd)
