"""Road network: representation, loading, task embedding and point-to-point searches."""
from irts.services.network.road_network import (
    NetworkBuilder,
    PreferredPath,
    RoadNetwork,
    Vertex,
    edge_key,
)
from irts.services.network.embedding import TaskPlacement, embed_task, embed_tasks
from irts.services.network.loader import (
    load_network,
    read_network,
    read_tasks,
    write_network,
    write_tasks,
)
from irts.services.network.search import (
    DetourLeg,
    euclidean_lower_bound,
    min_detour_legs,
    min_detour_path,
    shortest_preferred_path,
    shortest_travel_costs,
    shortest_travel_path,
)
from irts.services.network.grid import grid_network

__all__ = [
    "NetworkBuilder",
    "PreferredPath",
    "RoadNetwork",
    "Vertex",
    "edge_key",
    "TaskPlacement",
    "embed_task",
    "embed_tasks",
    "load_network",
    "read_network",
    "read_tasks",
    "write_network",
    "write_tasks",
    "DetourLeg",
    "euclidean_lower_bound",
    "min_detour_legs",
    "min_detour_path",
    "shortest_preferred_path",
    "shortest_travel_costs",
    "shortest_travel_path",
    "grid_network",
]
