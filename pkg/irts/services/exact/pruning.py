"""
Safe pruning rules of the exact search.

P1  no task visited yet and the vertex is already on the path
P2  the vertex already appears at or after the last visited task
P3  the same ordered task sequence already reached this vertex with travel <= ours
P4  travel so far + straight-line distance to d exceeds the budget
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from irts.core.config import EPS
from irts.services.network.search import euclidean_lower_bound
from irts.services.skyline.costs import PathState
from irts.services.skyline.query import Query


@dataclass(frozen=True)
class PruningToggles:
    p1: bool = True
    p2: bool = True
    p3: bool = True
    p4: bool = True

    @classmethod
    def without(cls, *rules: str) -> "PruningToggles":
        return cls(**{rule.lower(): False for rule in rules})


ALL_RULES = PruningToggles()

RegistryKey = Tuple[Tuple[int, ...], int]


class VisitedTaskRegistry:
    """Best travel cost seen per (ordered task sequence, end vertex)."""

    def __init__(self):
        self._best: Dict[RegistryKey, float] = {}

    def __len__(self) -> int:
        return len(self._best)

    def best(self, task_seq: Tuple[int, ...], last: Optional[int] = None) -> Optional[float]:
        return self._best.get((task_seq, task_seq[-1] if last is None else last))

    def check_and_register(self, key: RegistryKey, travel: float) -> bool:
        """True when an equal-or-cheaper arrival is already registered."""
        seen = self._best.get(key)
        if seen is not None and seen <= travel + EPS:
            return True
        self._best[key] = travel
        return False


def may_extend(p: PathState, u: int, toggles: PruningToggles = ALL_RULES) -> bool:
    """P1/P2: False when u was already visited since the last task (or since s)."""
    if u not in p.since_last_task:
        return True
    if p.task_seq:
        return not toggles.p2
    return not toggles.p1


def check_p3(p: PathState, reg: VisitedTaskRegistry) -> bool:
    """True = prune. The key carries the end vertex so revisits of an earlier task stay apart."""
    return reg.check_and_register((p.task_seq, p.last), p.travel)


def check_p4(p: PathState, q: Query) -> bool:
    """True = prune."""
    return p.travel + euclidean_lower_bound(q.net, p.last, q.destination) > q.budget + EPS
