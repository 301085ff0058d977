"""Task graph construction, k-nearest-neighbour reduction and leg expansion."""
from irts.services.taskgraph.graph import TaskEdge, TaskGraph, expand_to_network_path
from irts.services.taskgraph.builder import build_task_graph, knn_reduce

__all__ = ["TaskEdge", "TaskGraph", "expand_to_network_path", "build_task_graph", "knn_reduce"]
