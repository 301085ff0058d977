"""Skyline set maintained under insertions arriving in non-decreasing detour order."""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from irts.core.config import EPS


@dataclass(frozen=True, slots=True)
class SkylinePoint:
    detour: float
    travel: float
    reward: float
    path: Tuple[int, ...]

    @property
    def criteria(self) -> Tuple[float, float]:
        return (self.detour, self.reward)


class SkylineSet:
    """
    Mutually non-dominated points ordered by strictly increasing detour and reward.

    When `source`, `destination` and `budget` are given, every accepted point is
    checked to be a valid result path.
    """

    def __init__(self, source: Optional[int] = None, destination: Optional[int] = None,
                 budget: Optional[float] = None):
        self.source = source
        self.destination = destination
        self.budget = budget
        self._points: List[SkylinePoint] = []

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[SkylinePoint]:
        return iter(self._points)

    def __repr__(self) -> str:
        body = ", ".join(f"({p.detour:g}, {p.reward:g})" for p in self._points)
        return f"SkylineSet[{body}]"

    @property
    def points(self) -> Tuple[SkylinePoint, ...]:
        return tuple(self._points)

    def pairs(self) -> List[Tuple[float, float]]:
        return [p.criteria for p in self._points]

    def _validate(self, cand: SkylinePoint) -> None:
        if not cand.path:
            raise ValueError("skyline point has an empty path")
        if self.source is not None and cand.path[0] != self.source:
            raise ValueError(f"path starts at {cand.path[0]}, expected {self.source}")
        if self.destination is not None and cand.path[-1] != self.destination:
            raise ValueError(f"path ends at {cand.path[-1]}, expected {self.destination}")
        if self.budget is not None and cand.travel > self.budget + EPS:
            raise ValueError(f"path travel {cand.travel} exceeds budget {self.budget}")
        if cand.reward <= 0:
            raise ValueError("path performs no task")

    def insert(self, cand: SkylinePoint) -> bool:
        """Compare against the last point only; callers dequeue in detour order."""
        self._validate(cand)
        if not self._points:
            self._points.append(cand)
            return True
        last = self._points[-1]
        if cand.detour < last.detour - EPS:
            raise AssertionError(
                f"skyline insert out of order: detour {cand.detour} after {last.detour}"
            )
        if cand.reward <= last.reward + EPS:
            return False
        if cand.detour <= last.detour + EPS:
            self._points.pop()
        self._points.append(cand)
        return True

    @classmethod
    def from_points(cls, points: Iterable[SkylinePoint], **context) -> "SkylineSet":
        """Non-dominated filter of an arbitrary multiset of points."""
        ordered = sorted(points, key=lambda p: (p.detour, -p.reward, p.travel, p.path))
        sky = cls(**context)
        for point in ordered:
            sky.insert(point)
        return sky


def skyline_insert(sky: SkylineSet, cand: SkylinePoint) -> bool:
    return sky.insert(cand)
