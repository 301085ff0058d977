"""Task embedding: a task lying inside a road segment becomes a vertex splitting it."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple
import logging

from irts.core.config import EPS
from irts.core.errors import EdgeNotFoundError, NetworkFormatError
from irts.services.network.road_network import NetworkBuilder, RoadNetwork

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TaskPlacement:
    u: int
    v: int
    offset: float  # distance from u along (u, v)
    reward: float
    line: Optional[int] = None


def _embed(builder: NetworkBuilder, placement: TaskPlacement) -> int:
    u, v = placement.u, placement.v
    cost = builder.edge_cost(u, v)
    if cost is None:
        raise EdgeNotFoundError(f"edge ({u}, {v}) not found")
    if not (EPS < placement.offset < cost - EPS):
        raise NetworkFormatError(
            f"offset {placement.offset} must lie strictly inside (0, {cost})", line=placement.line
        )
    if placement.reward <= 0:
        raise NetworkFormatError("task reward must be positive", line=placement.line)

    cu, cv = builder.coord(u), builder.coord(v)
    coord = None
    if cu is not None and cv is not None:
        frac = placement.offset / cost
        coord = (cu[0] + frac * (cv[0] - cu[0]), cu[1] + frac * (cv[1] - cu[1]))

    tid = builder.next_id()
    builder.add_vertex(tid, coord, placement.reward, line=placement.line)
    builder.remove_edge(u, v)
    builder.add_edge(u, tid, placement.offset, line=placement.line)
    builder.add_edge(tid, v, cost - placement.offset, line=placement.line)
    return tid


def embed_tasks(net: RoadNetwork, placements: Iterable[TaskPlacement]) -> Tuple[RoadNetwork, List[int]]:
    """Embed several tasks in order; returns the new network and the new task ids."""
    builder = NetworkBuilder.from_network(net)
    new_ids = [_embed(builder, placement) for placement in placements]
    if new_ids:
        logger.debug(f"Embedded {len(new_ids)} tasks")
    return builder.build(), new_ids


def embed_task(net: RoadNetwork, u: int, v: int, offset: float, reward: float) -> RoadNetwork:
    """
    Split edge (u, v) with a new task vertex at `offset` from u.
    The new vertex gets id max(existing ids) + 1.
    """
    embedded, _ = embed_tasks(net, [TaskPlacement(u, v, offset, reward)])
    return embedded
