"""
Task graph construction.
One lexicographic min-detour search from s, then one from every included task.
"""
from typing import Dict, Mapping, Tuple
import logging

from irts.core.config import EPS
from irts.services.network.road_network import PreferredPath, RoadNetwork
from irts.services.network.search import min_detour_legs
from irts.services.taskgraph.graph import TaskEdge, TaskGraph

logger = logging.getLogger(__name__)


def build_task_graph(net: RoadNetwork, pref: PreferredPath, tasks: Mapping[int, float], b: float) -> TaskGraph:
    s, d = pref.source, pref.destination
    edges: Dict[Tuple[int, int], TaskEdge] = {}

    # s -> t for every task whose min-detour leg fits the budget
    from_s = min_detour_legs(net, s, pref, tasks, detour_cap=b)
    included: Dict[int, float] = {}
    for t in sorted(tasks):
        leg = from_s.get(t)
        if leg is not None and leg.travel <= b + EPS:
            included[t] = tasks[t]
            edges[(s, t)] = TaskEdge(s, t, leg.detour, leg.travel, leg.path)

    # t_i -> t_j within b - c(s, t_i); t_i -> d unconditionally
    for ti in included:
        cap = b - edges[(s, ti)].travel
        others = [tj for tj in included if tj != ti]
        legs = min_detour_legs(net, ti, pref, others, detour_cap=cap, required=[d])
        for tj in others:
            leg = legs.get(tj)
            if leg is not None and leg.travel <= cap + EPS:
                edges[(ti, tj)] = TaskEdge(ti, tj, leg.detour, leg.travel, leg.path)
        leg = legs.get(d)
        if leg is not None:
            edges[(ti, d)] = TaskEdge(ti, d, leg.detour, leg.travel, leg.path)

    tg = TaskGraph(s, d, included, edges, b)
    logger.debug(f"Built {tg} from {len(tasks)} candidate tasks")
    return tg


def knn_reduce(tg: TaskGraph, k: int) -> TaskGraph:
    """Keep, per task, only its k closest task successors by detour (ties: travel, id)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    kept: Dict[Tuple[int, int], TaskEdge] = {}
    for edge in tg.edges():
        if edge.source == tg.source or edge.target == tg.destination:
            kept[(edge.source, edge.target)] = edge
    for t in tg.tasks:
        task_edges = [e for e in tg.successors(t) if e.target != tg.destination]
        task_edges.sort(key=lambda e: (e.detour, e.travel, e.target))
        for edge in task_edges[:k]:
            kept[(edge.source, edge.target)] = edge
    return tg.with_edges(kept)
