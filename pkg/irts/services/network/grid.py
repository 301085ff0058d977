"""
Synthetic desk-scale road networks.
4-connected grid with jittered edge costs, planar coordinates and embedded tasks.
"""
from typing import Tuple
import logging

import networkx as nx
import numpy as np

from irts.core.errors import NetworkFormatError
from irts.services.network.embedding import TaskPlacement, embed_tasks
from irts.services.network.road_network import NetworkBuilder, RoadNetwork

logger = logging.getLogger(__name__)

# Edge costs are drawn from [JITTER_LOW, JITTER_HIGH] x cell size; coordinates are
# spaced JITTER_LOW x cell apart so every edge stays at least as long as its chord.
JITTER_LOW = 0.8
JITTER_HIGH = 1.2


def grid_network(rows: int, cols: int, cell_size: float, num_tasks: int, seed: int) -> RoadNetwork:
    """
    Generate a rows x cols grid. Vertex (r, c) gets id r * cols + c.
    `num_tasks` tasks (reward 1) are embedded on distinct random edges.
    """
    if rows < 1 or cols < 1:
        raise NetworkFormatError(f"grid needs at least one row and one column, got {rows}x{cols}")
    rng = np.random.default_rng(seed)
    topology = nx.grid_2d_graph(rows, cols)

    def vid(node: Tuple[int, int]) -> int:
        r, c = node
        return r * cols + c

    spacing = JITTER_LOW * cell_size
    builder = NetworkBuilder()
    for r in range(rows):
        for c in range(cols):
            builder.add_vertex(vid((r, c)), (c * spacing, r * spacing))

    edges = sorted((min(vid(a), vid(b)), max(vid(a), vid(b))) for a, b in topology.edges())
    costs = rng.uniform(JITTER_LOW, JITTER_HIGH, size=len(edges)) * cell_size
    for (u, v), cost in zip(edges, costs):
        builder.add_edge(u, v, float(cost))
    net = builder.build()

    num_tasks = min(num_tasks, len(edges))
    if num_tasks <= 0:
        return net

    chosen = np.sort(rng.choice(len(edges), size=num_tasks, replace=False))
    fractions = rng.uniform(0.1, 0.9, size=num_tasks)
    placements = [
        TaskPlacement(edges[i][0], edges[i][1], float(costs[i] * frac), 1.0)
        for i, frac in zip(chosen, fractions)
    ]
    net, _ = embed_tasks(net, placements)
    logger.info(f"Generated {rows}x{cols} grid: {net}")
    return net
