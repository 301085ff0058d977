"""
Exact skyline search.
Best-first over network paths in non-decreasing detour (ties: travel, then FIFO).
Vertices may be revisited; termination relies on strictly positive edge costs.
"""
from heapq import heappop, heappush
from itertools import count
from typing import Optional
import logging

from irts.core.config import EPS
from irts.services.exact.pruning import (
    ALL_RULES,
    PruningToggles,
    VisitedTaskRegistry,
    check_p3,
    check_p4,
    may_extend,
)
from irts.services.skyline.costs import PathState
from irts.services.skyline.query import Query
from irts.services.skyline.skyline_set import SkylinePoint, SkylineSet
from irts.services.skyline.stats import SearchStats

logger = logging.getLogger(__name__)

ExactQuery = Query


def exact_skyline(
    q: ExactQuery,
    pruning: PruningToggles = ALL_RULES,
    stats: Optional[SearchStats] = None,
) -> SkylineSet:
    stats = stats if stats is not None else SearchStats()
    net, pref, rewards = q.net, q.pref, q.rewards
    sky = SkylineSet(source=q.source, destination=q.destination, budget=q.budget)
    registry = VisitedTaskRegistry()
    tie = count()

    start = PathState.start(q.source)
    queue = [(0.0, 0.0, next(tie), start)]

    while queue:
        detour, travel, _, p = heappop(queue)
        if detour > q.budget + EPS:
            break
        stats.record_pop("exact", detour, travel, p.vertices)
        v = p.last

        # reaching d is a candidate event; the path stays expandable
        if v == q.destination and p.task_seq:
            sky.insert(SkylinePoint(p.detour, p.travel, p.reward, p.vertices))

        if v in rewards and pruning.p3 and check_p3(p, registry):
            stats.prune("p3")
            continue

        for u, cost in net.adjacency[v]:
            if not may_extend(p, u, pruning):
                stats.prune("p2" if p.task_seq else "p1")
                continue
            child = p.extend(u, cost, pref.edge_detour(v, u, cost), rewards)
            if child.travel > q.budget + EPS:
                stats.prune("budget")
                continue
            if pruning.p4 and check_p4(child, q):
                stats.prune("p4")
                continue
            if u in rewards:
                stats.generated += 1
            heappush(queue, (child.detour, child.travel, next(tie), child))

    logger.info(f"exact: {len(sky)} skyline points ({stats.summary()})")
    return sky
