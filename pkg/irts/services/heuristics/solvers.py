"""The four task-graph heuristics."""
from typing import Optional

from irts.services.heuristics.search import ExpansionPolicy, search_task_graph
from irts.services.skyline.skyline_set import SkylineSet
from irts.services.skyline.stats import SearchStats
from irts.services.taskgraph.builder import knn_reduce
from irts.services.taskgraph.graph import TaskGraph


def doh(tg: TaskGraph, b: float, stats: Optional[SearchStats] = None) -> SkylineSet:
    """Detour oriented: expands every successor."""
    return search_task_graph(tg, b, ExpansionPolicy.ALL, stats, label="doh")


def kgh(tg: TaskGraph, k: int, b: float, stats: Optional[SearchStats] = None) -> SkylineSet:
    """DOH on the k-nearest-neighbour reduction of the task graph."""
    return search_task_graph(knn_reduce(tg, k), b, ExpansionPolicy.ALL, stats, label="kgh")


def mdh(tg: TaskGraph, b: float, stats: Optional[SearchStats] = None) -> SkylineSet:
    return search_task_graph(tg, b, ExpansionPolicy.MIN_DETOUR, stats, label="mdh")


def mrh(tg: TaskGraph, b: float, stats: Optional[SearchStats] = None) -> SkylineSet:
    return search_task_graph(tg, b, ExpansionPolicy.MAX_REWARD, stats, label="mrh")
