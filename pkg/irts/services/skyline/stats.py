"""Per-query search counters shared by all solvers."""
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Sequence
import logging

logger = logging.getLogger(__name__)


@dataclass
class SearchStats:
    """
    `generated` counts child paths that end at a task. With `trace` on, the
    dequeued detours and one line per step are kept as well.
    """
    trace: bool = False
    dequeued: int = 0
    generated: int = 0
    pruned: Counter = field(default_factory=Counter)
    dequeued_detours: List[float] = field(default_factory=list)
    steps: List[str] = field(default_factory=list)

    def record_pop(self, solver: str, detour: float, travel: float, path: Sequence[int]) -> None:
        self.dequeued += 1
        if self.trace:
            self.dequeued_detours.append(detour)
            step = f"{solver} pop detour={detour:g} travel={travel:g} path={list(path)}"
            self.steps.append(step)
            logger.debug(step)

    def record_step(self, message: str) -> None:
        if self.trace:
            self.steps.append(message)
            logger.debug(message)

    def prune(self, rule: str) -> None:
        self.pruned[rule] += 1

    def summary(self) -> str:
        rules = ", ".join(f"{k}={v}" for k, v in sorted(self.pruned.items()))
        return f"dequeued={self.dequeued} generated={self.generated} pruned[{rules}]"
