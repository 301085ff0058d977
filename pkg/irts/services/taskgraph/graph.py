"""
Task graph: condensed directed graph over {s} + feasible tasks + {d}.
Each edge stands for the minimum-detour network path between its endpoints.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple
import math

from irts.core.errors import TaskGraphError


@dataclass(frozen=True, slots=True)
class TaskEdge:
    source: int
    target: int
    detour: float
    travel: float
    path: Tuple[int, ...]  # realized network path, source..target


class TaskGraph:
    """Immutable once built; knn_reduce derives a new graph with a subset of edges."""

    def __init__(self, source: int, destination: int, rewards: Mapping[int, float],
                 edges: Mapping[Tuple[int, int], TaskEdge], budget: float):
        self.source = source
        self.destination = destination
        self.rewards: Dict[int, float] = dict(sorted(rewards.items()))
        self.budget = budget
        self._edges: Dict[Tuple[int, int], TaskEdge] = dict(edges)
        succ: Dict[int, List[TaskEdge]] = {node: [] for node in self.nodes}
        for (u, v), edge in sorted(self._edges.items()):
            if u == v or v == source or u == destination:
                raise TaskGraphError(f"edge ({u}, {v}) is not allowed in a task graph")
            if u not in succ or v not in succ:
                raise TaskGraphError(f"edge ({u}, {v}) references an unknown node")
            succ[u].append(edge)
        self._succ: Dict[int, Tuple[TaskEdge, ...]] = {u: tuple(es) for u, es in succ.items()}

    def __repr__(self) -> str:
        return f"TaskGraph(tasks={len(self.rewards)}, edges={len(self._edges)})"

    @property
    def nodes(self) -> Tuple[int, ...]:
        return (self.source, *self.rewards, self.destination)

    @property
    def tasks(self) -> Tuple[int, ...]:
        return tuple(self.rewards)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def edges(self) -> Iterator[TaskEdge]:
        for key in sorted(self._edges):
            yield self._edges[key]

    def edge(self, u: int, v: int) -> Optional[TaskEdge]:
        return self._edges.get((u, v))

    def successors(self, u: int) -> Tuple[TaskEdge, ...]:
        return self._succ.get(u, ())

    def reward(self, node: int) -> float:
        return self.rewards.get(node, 0.0)

    def travel_to_destination(self, node: int) -> float:
        """c(node, d) along its task-graph edge; 0 at d, infinite when missing."""
        if node == self.destination:
            return 0.0
        edge = self._edges.get((node, self.destination))
        return edge.travel if edge is not None else math.inf

    def with_edges(self, edges: Mapping[Tuple[int, int], TaskEdge]) -> "TaskGraph":
        return TaskGraph(self.source, self.destination, self.rewards, edges, self.budget)

    def dump_edges(self) -> List[str]:
        """Debug listing, one `from to detour travel` line per edge."""
        return [f"{e.source} {e.target} {e.detour!r} {e.travel!r}" for e in self.edges()]


def expand_to_network_path(tg: TaskGraph, tg_path: Sequence[int]) -> Tuple[int, ...]:
    """Concatenate the realized legs, collapsing the shared junction vertices."""
    if not tg_path:
        return ()
    vertices: List[int] = [tg_path[0]]
    for u, v in zip(tg_path, tg_path[1:]):
        edge = tg.edge(u, v)
        if edge is None:
            raise TaskGraphError(f"task graph has no edge ({u}, {v})")
        vertices.extend(edge.path[1:])
    return tuple(vertices)
