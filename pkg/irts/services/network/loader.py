"""
Plain-text network and task files.

Network file, one record per line:
    id x y reward     vertex (x and y may be '-' when the position is unknown)
    u v cost          undirected edge
Task file, one record per line:
    vertex reward             an existing vertex becomes a task
    u v offset reward         a new task vertex is embedded on edge (u, v)
Blank lines and lines starting with '#' are ignored.
"""
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, TextIO, Tuple, Union
import logging

from irts.core.errors import NetworkFormatError
from irts.services.network.embedding import TaskPlacement, embed_tasks
from irts.services.network.road_network import NetworkBuilder, RoadNetwork

logger = logging.getLogger(__name__)

Record = Union[str, Tuple[int, str]]


def _numbered(records: Iterable[Record]) -> Iterator[Tuple[int, List[str]]]:
    for index, record in enumerate(records, start=1):
        line, text = record if isinstance(record, tuple) else (index, record)
        text = text.strip()
        if not text or text.startswith("#"):
            continue
        yield line, text.split()


def _number(token: str, line: int, record: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise NetworkFormatError(f"'{token}' is not a number", line=line, record=record) from None


def _vertex_id(token: str, line: int, record: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise NetworkFormatError(f"'{token}' is not a vertex id", line=line, record=record) from None


def load_network(vertex_records: Iterable[Record], edge_records: Iterable[Record]) -> RoadNetwork:
    """Build a validated RoadNetwork from vertex and edge record streams."""
    builder = NetworkBuilder()

    for line, fields in _numbered(vertex_records):
        record = " ".join(fields)
        if len(fields) != 4:
            raise NetworkFormatError("vertex record needs 'id x y reward'", line=line, record=record)
        vid = _vertex_id(fields[0], line, record)
        if fields[1] == "-" or fields[2] == "-":
            coord = None
        else:
            coord = (_number(fields[1], line, record), _number(fields[2], line, record))
        builder.add_vertex(vid, coord, _number(fields[3], line, record), line=line)

    for line, fields in _numbered(edge_records):
        record = " ".join(fields)
        if len(fields) != 3:
            raise NetworkFormatError("edge record needs 'u v cost'", line=line, record=record)
        builder.add_edge(
            _vertex_id(fields[0], line, record),
            _vertex_id(fields[1], line, record),
            _number(fields[2], line, record),
            line=line,
        )

    net = builder.build()
    logger.debug(f"Loaded {net}")
    return net


def read_network(source: Union[str, Path, TextIO]) -> RoadNetwork:
    """Read a single network file; records are told apart by their field count."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            lines = handle.readlines()
    else:
        lines = source.readlines()

    vertex_lines: List[Tuple[int, str]] = []
    edge_lines: List[Tuple[int, str]] = []
    for line, fields in _numbered(lines):
        target = vertex_lines if len(fields) == 4 else edge_lines
        target.append((line, " ".join(fields)))
    return load_network(vertex_lines, edge_lines)


def write_network(net: RoadNetwork, stream: TextIO) -> None:
    stream.write("# vertices: id x y reward\n")
    for vid in sorted(net.vertices):
        vertex = net.vertices[vid]
        x, y = ("-", "-") if vertex.coord is None else (repr(vertex.coord[0]), repr(vertex.coord[1]))
        stream.write(f"{vid} {x} {y} {vertex.reward!r}\n")
    stream.write("# edges: u v cost\n")
    for u, v, cost in net.edges():
        stream.write(f"{u} {v} {cost!r}\n")


def read_tasks(source: Union[str, Path, TextIO], net: RoadNetwork) -> Tuple[RoadNetwork, Dict[int, float]]:
    """
    Read a task file against a network.
    Returns the (possibly re-embedded) network and the query's task rewards.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            lines = handle.readlines()
    else:
        lines = source.readlines()

    tasks: Dict[int, float] = {}
    placements: List[TaskPlacement] = []
    for line, fields in _numbered(lines):
        record = " ".join(fields)
        if len(fields) == 2:
            vid = _vertex_id(fields[0], line, record)
            reward = _number(fields[1], line, record)
            if not net.has_vertex(vid):
                raise NetworkFormatError(f"task vertex {vid} does not exist", line=line, record=record)
            if reward <= 0:
                raise NetworkFormatError("task reward must be positive", line=line, record=record)
            if vid in tasks:
                raise NetworkFormatError(f"task {vid} listed twice", line=line, record=record)
            tasks[vid] = reward
        elif len(fields) == 4:
            placements.append(TaskPlacement(
                u=_vertex_id(fields[0], line, record),
                v=_vertex_id(fields[1], line, record),
                offset=_number(fields[2], line, record),
                reward=_number(fields[3], line, record),
                line=line,
            ))
        else:
            raise NetworkFormatError("task record needs 'vertex reward' or 'u v offset reward'",
                                     line=line, record=record)

    if placements:
        net, new_ids = embed_tasks(net, placements)
        for placement, vid in zip(placements, new_ids):
            tasks[vid] = placement.reward
    return net, dict(sorted(tasks.items()))


def write_tasks(tasks: Dict[int, float], stream: TextIO) -> None:
    stream.write("# tasks: vertex reward\n")
    for vid in sorted(tasks):
        stream.write(f"{vid} {tasks[vid]!r}\n")
