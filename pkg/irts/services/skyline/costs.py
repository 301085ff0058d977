"""
Path cost accounting.
Travel = sum of edge costs; detour = sum of costs of traversed edges that are not
on the preferred path; reward = sum over distinct task vertices visited.
"""
from dataclasses import dataclass
from typing import FrozenSet, Mapping, NamedTuple, Optional, Sequence, Tuple

from irts.core.errors import EdgeNotFoundError
from irts.services.network.road_network import PreferredPath, RoadNetwork


class PathCosts(NamedTuple):
    travel: float
    detour: float
    reward: float


def recompute_costs(
    path: Sequence[int],
    net: RoadNetwork,
    pref: PreferredPath,
    rewards: Optional[Mapping[int, float]] = None,
) -> PathCosts:
    """From-scratch evaluation; `rewards` defaults to the network's task rewards."""
    rewards = net.rewards if rewards is None else rewards
    travel = detour = 0.0
    for u, v in zip(path, path[1:]):
        cost = net.edge_cost(u, v)
        if cost is None:
            raise EdgeNotFoundError(f"path vertices {u} and {v} are not adjacent")
        travel += cost
        detour += pref.edge_detour(u, v, cost)
    reward = sum(rewards[t] for t in set(path) if t in rewards)
    return PathCosts(travel, detour, reward)


@dataclass(frozen=True, slots=True)
class PathState:
    """
    A partial path under search.

    `since_last_task` holds the vertices at or after the last task occurrence
    (from s when no task was visited yet) so revisit checks are O(1).
    """
    vertices: Tuple[int, ...]
    travel: float
    detour: float
    reward: float
    last_task_pos: Optional[int]
    task_seq: Tuple[int, ...]
    since_last_task: FrozenSet[int]

    @classmethod
    def start(cls, source: int) -> "PathState":
        """s is never a task of its own query."""
        return cls((source,), 0.0, 0.0, 0.0, None, (), frozenset((source,)))

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def extend(self, u: int, cost: float, detour: float, rewards: Mapping[int, float]) -> "PathState":
        vertices = self.vertices + (u,)
        if u in rewards:
            if u in self.task_seq:
                reward, task_seq = self.reward, self.task_seq
            else:
                reward, task_seq = self.reward + rewards[u], self.task_seq + (u,)
            return PathState(vertices, self.travel + cost, self.detour + detour, reward,
                             len(vertices) - 1, task_seq, frozenset((u,)))
        return PathState(vertices, self.travel + cost, self.detour + detour, self.reward,
                         self.last_task_pos, self.task_seq, self.since_last_task | {u})
