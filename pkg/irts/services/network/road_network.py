"""
Road network representation.
Undirected weighted graph whose task vertices carry positive rewards,
plus the worker's preferred path with its edge-membership index.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
import math

import networkx as nx

from irts.core.config import EPS
from irts.core.errors import EdgeNotFoundError, NetworkFormatError, UnknownVertexError


Coord = Tuple[float, float]
EdgeKey = Tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    """Unordered edge identity."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, slots=True)
class Vertex:
    id: int
    coord: Optional[Coord] = None
    reward: float = 0.0

    @property
    def is_task(self) -> bool:
        return self.reward > 0


class RoadNetwork:
    """Immutable road network. Build one through NetworkBuilder or the loader."""

    def __init__(self, vertices: Mapping[int, Vertex], adjacency: Mapping[int, Sequence[Tuple[int, float]]]):
        self.vertices: Dict[int, Vertex] = dict(vertices)
        self.adjacency: Dict[int, Tuple[Tuple[int, float], ...]] = {
            vid: tuple(adjacency.get(vid, ())) for vid in self.vertices
        }
        self.task_ids: FrozenSet[int] = frozenset(v.id for v in self.vertices.values() if v.is_task)
        self._costs: Dict[EdgeKey, float] = {}
        for u, nbrs in self.adjacency.items():
            for v, cost in nbrs:
                self._costs[edge_key(u, v)] = cost

    def __repr__(self) -> str:
        return f"RoadNetwork(|V|={self.num_vertices}, |E|={self.num_edges}, |T|={len(self.task_ids)})"

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self._costs)

    def has_vertex(self, vid: int) -> bool:
        return vid in self.vertices

    def require(self, *vids: int) -> None:
        for vid in vids:
            if vid not in self.vertices:
                raise UnknownVertexError(f"vertex {vid} is not in the network")

    def neighbors(self, vid: int) -> Tuple[Tuple[int, float], ...]:
        return self.adjacency[vid]

    def edge_cost(self, u: int, v: int) -> Optional[float]:
        return self._costs.get(edge_key(u, v))

    def edges(self) -> Iterator[Tuple[int, int, float]]:
        """Each undirected edge once, ordered by (min id, max id)."""
        for (u, v) in sorted(self._costs):
            yield u, v, self._costs[(u, v)]

    def coord(self, vid: int) -> Optional[Coord]:
        return self.vertices[vid].coord

    def reward(self, vid: int) -> float:
        return self.vertices[vid].reward

    @cached_property
    def rewards(self) -> Dict[int, float]:
        """Rewards of the task vertices."""
        return {t: self.vertices[t].reward for t in sorted(self.task_ids)}

    @cached_property
    def graph(self) -> nx.Graph:
        """networkx view used for single-criterion shortest paths."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_weighted_edges_from(self.edges(), weight="cost")
        return g


class NetworkBuilder:
    """Mutable staging area that validates records before freezing a RoadNetwork."""

    def __init__(self):
        self._vertices: Dict[int, Vertex] = {}
        self._adj: Dict[int, Dict[int, float]] = {}

    @classmethod
    def from_network(cls, net: RoadNetwork) -> "NetworkBuilder":
        builder = cls()
        builder._vertices = dict(net.vertices)
        builder._adj = {vid: dict(nbrs) for vid, nbrs in net.adjacency.items()}
        return builder

    def next_id(self) -> int:
        return max(self._vertices) + 1 if self._vertices else 0

    def add_vertex(self, vid: int, coord: Optional[Coord] = None, reward: float = 0.0,
                   line: Optional[int] = None) -> None:
        if vid in self._vertices:
            raise NetworkFormatError(f"duplicate vertex id {vid}", line=line)
        if reward < 0 or not math.isfinite(reward):
            raise NetworkFormatError(f"vertex {vid} has invalid reward {reward}", line=line)
        self._vertices[vid] = Vertex(vid, coord, float(reward))
        self._adj[vid] = {}

    def add_edge(self, u: int, v: int, cost: float, line: Optional[int] = None) -> None:
        record = f"{u} {v} {cost}"
        for end in (u, v):
            if end not in self._vertices:
                raise NetworkFormatError(f"edge endpoint {end} does not exist", line=line, record=record)
        if u == v:
            raise NetworkFormatError("self-loop edges are not allowed", line=line, record=record)
        if not (cost > 0) or not math.isfinite(cost):
            raise NetworkFormatError("edge cost must be strictly positive", line=line, record=record)
        if v in self._adj[u]:
            raise NetworkFormatError(f"duplicate edge ({u}, {v})", line=line, record=record)
        cu, cv = self._vertices[u].coord, self._vertices[v].coord
        if cu is not None and cv is not None:
            straight = math.dist(cu, cv)
            if cost < straight - EPS * max(1.0, straight):
                raise NetworkFormatError(
                    f"edge cost {cost} is below the Euclidean endpoint distance {straight:.6f}",
                    line=line, record=record,
                )
        self._adj[u][v] = float(cost)
        self._adj[v][u] = float(cost)

    def remove_edge(self, u: int, v: int) -> float:
        if u not in self._adj or v not in self._adj[u]:
            raise EdgeNotFoundError(f"edge ({u}, {v}) not found")
        cost = self._adj[u].pop(v)
        del self._adj[v][u]
        return cost

    def edge_cost(self, u: int, v: int) -> Optional[float]:
        return self._adj.get(u, {}).get(v)

    def coord(self, vid: int) -> Optional[Coord]:
        return self._vertices[vid].coord

    def build(self) -> RoadNetwork:
        adjacency = {vid: list(nbrs.items()) for vid, nbrs in self._adj.items()}
        return RoadNetwork(self._vertices, adjacency)


class PreferredPath:
    """The worker's route from s to d; detours are measured against its edge set."""

    def __init__(self, net: RoadNetwork, vertices: Iterable[int]):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        if not self.vertices:
            raise NetworkFormatError("preferred path must contain at least one vertex")
        net.require(*self.vertices)
        edges: List[EdgeKey] = []
        total = 0.0
        for u, v in zip(self.vertices, self.vertices[1:]):
            cost = net.edge_cost(u, v)
            if cost is None:
                raise EdgeNotFoundError(f"preferred path vertices {u} and {v} are not adjacent")
            edges.append(edge_key(u, v))
            total += cost
        self.edge_set: FrozenSet[EdgeKey] = frozenset(edges)
        self.total_cost: float = total

    def __repr__(self) -> str:
        return f"PreferredPath({self.source}->{self.destination}, cost={self.total_cost:g})"

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def destination(self) -> int:
        return self.vertices[-1]

    def contains_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def edge_detour(self, u: int, v: int, cost: float) -> float:
        """Detour contribution of one traversal of (u, v)."""
        return 0.0 if edge_key(u, v) in self.edge_set else cost
