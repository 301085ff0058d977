"""
Best-first search over the task graph, shared by the four heuristics.

Paths are dequeued in non-decreasing detour (ties: travel, then FIFO). A path
ending at d is offered to the skyline and not expanded further. A child is
enqueued only if its travel plus the cost of going straight on to d fits the
budget. The expansion policy decides which successors become children.
"""
from dataclasses import dataclass
from enum import Enum
from heapq import heappop, heappush
from itertools import count
from typing import List, Optional, Tuple
import logging

from irts.core.config import EPS
from irts.services.skyline.skyline_set import SkylinePoint, SkylineSet
from irts.services.skyline.stats import SearchStats
from irts.services.taskgraph.graph import TaskEdge, TaskGraph, expand_to_network_path

logger = logging.getLogger(__name__)


class ExpansionPolicy(str, Enum):
    ALL = "all"  # every successor not yet on the path
    MIN_DETOUR = "min_detour"  # the single successor minimising DC(P) + d(v, u)
    MAX_REWARD = "max_reward"  # the single task successor with the highest reward


@dataclass(frozen=True, slots=True)
class TGPathState:
    nodes: Tuple[int, ...]
    travel: float
    detour: float
    reward: float

    @property
    def last(self) -> int:
        return self.nodes[-1]

    def extend(self, edge: TaskEdge, reward: float) -> "TGPathState":
        return TGPathState(self.nodes + (edge.target,), self.travel + edge.travel,
                           self.detour + edge.detour, self.reward + reward)


def _select(tg: TaskGraph, p: TGPathState, policy: ExpansionPolicy) -> List[TaskEdge]:
    candidates = [e for e in tg.successors(p.last) if e.target not in p.nodes]
    if not candidates or policy is ExpansionPolicy.ALL:
        return candidates
    if policy is ExpansionPolicy.MIN_DETOUR:
        return [min(candidates, key=lambda e: (e.detour, e.travel, e.target))]
    tasks = [e for e in candidates if e.target != tg.destination]
    if not tasks:
        return candidates
    return [min(tasks, key=lambda e: (-tg.reward(e.target), e.detour, e.target))]


def search_task_graph(
    tg: TaskGraph,
    b: float,
    policy: ExpansionPolicy,
    stats: Optional[SearchStats] = None,
    label: str = "heuristic",
) -> SkylineSet:
    stats = stats if stats is not None else SearchStats()
    sky = SkylineSet(source=tg.source, destination=tg.destination, budget=b)
    tie = count()
    queue = [(0.0, 0.0, next(tie), TGPathState((tg.source,), 0.0, 0.0, 0.0))]

    while queue:
        detour, travel, _, p = heappop(queue)
        if detour > b + EPS:
            break
        stats.record_pop(label, detour, travel, p.nodes)

        if p.last == tg.destination:
            if len(p.nodes) > 2:
                path = expand_to_network_path(tg, p.nodes)
                sky.insert(SkylinePoint(p.detour, p.travel, p.reward, path))
            continue

        for edge in _select(tg, p, policy):
            child = p.extend(edge, tg.reward(edge.target))
            if edge.target != tg.destination:
                stats.generated += 1
            if child.travel + tg.travel_to_destination(edge.target) > b + EPS:
                stats.prune("budget")
                stats.record_step(f"{label} drop {list(child.nodes)} travel={child.travel:g}")
                continue
            heappush(queue, (child.detour, child.travel, next(tie), child))

    logger.info(f"{label}: {len(sky)} skyline points ({stats.summary()})")
    return sky
