"""
Skyline result files.
Text: one record per point, `detour travel reward vertex_ids...`.
JSON: a SkylineDocument.
"""
from pathlib import Path
from typing import List, Optional, TextIO, Union
import math

from irts.core.errors import NetworkFormatError
from irts.schemas.skyline import SkylineDocument, SkylinePointSchema
from irts.services.skyline.skyline_set import SkylinePoint, SkylineSet


def format_cost(value: float) -> str:
    rounded = round(value, 9)
    if rounded == int(rounded):
        return str(int(rounded))
    return repr(rounded)


def point_line(point: SkylinePoint) -> str:
    fields = [format_cost(point.detour), format_cost(point.travel), format_cost(point.reward)]
    fields += [str(v) for v in point.path]
    return " ".join(fields)


def write_skyline_text(sky: SkylineSet, stream: TextIO) -> None:
    for point in sky:
        stream.write(point_line(point) + "\n")


def to_document(sky: SkylineSet, solver: Optional[str] = None) -> SkylineDocument:
    return SkylineDocument(
        solver=solver,
        source=sky.source,
        destination=sky.destination,
        budget=sky.budget,
        points=[
            SkylinePointSchema(detour=p.detour, travel=p.travel, reward=p.reward, path=list(p.path))
            for p in sky
        ],
    )


def write_skyline_json(sky: SkylineSet, stream: TextIO, solver: Optional[str] = None) -> None:
    stream.write(to_document(sky, solver).model_dump_json(indent=2) + "\n")


def _checked(point: SkylinePoint, line: Optional[int], record: str) -> SkylinePoint:
    if not point.path:
        raise NetworkFormatError("skyline record has an empty path", line=line, record=record)
    if not all(math.isfinite(x) and x >= 0 for x in (point.detour, point.travel, point.reward)):
        raise NetworkFormatError("skyline costs must be finite and non-negative", line=line, record=record)
    if point.reward <= 0:
        raise NetworkFormatError("skyline record performs no task", line=line, record=record)
    return point


def read_skyline(source: Union[str, Path, TextIO]) -> SkylineSet:
    """Read either format; the points are re-filtered into a SkylineSet."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = source.read()

    if text.lstrip().startswith("{"):
        document = SkylineDocument.model_validate_json(text)
        points = [
            _checked(SkylinePoint(p.detour, p.travel, p.reward, tuple(p.path)), None, f"point {i}")
            for i, p in enumerate(document.points)
        ]
        return SkylineSet.from_points(points)

    points: List[SkylinePoint] = []
    for line, raw in enumerate(text.splitlines(), start=1):
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        fields = raw.split()
        if len(fields) < 4:
            raise NetworkFormatError("skyline record needs 'detour travel reward path...'",
                                     line=line, record=raw)
        try:
            detour, travel, reward = (float(f) for f in fields[:3])
            path = tuple(int(f) for f in fields[3:])
        except ValueError:
            raise NetworkFormatError("malformed skyline record", line=line, record=raw) from None
        points.append(_checked(SkylinePoint(detour, travel, reward, path), line, raw))
    return SkylineSet.from_points(points)
