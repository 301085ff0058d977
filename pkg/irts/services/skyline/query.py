"""A skyline query: preferred path, candidate tasks with rewards, travel budget."""
from dataclasses import dataclass, field
from typing import Dict, Mapping

from irts.core.errors import NetworkFormatError
from irts.services.network.road_network import PreferredPath, RoadNetwork


@dataclass(frozen=True)
class Query:
    net: RoadNetwork
    pref: PreferredPath
    tasks: Mapping[int, float]
    budget: float
    rewards: Dict[int, float] = field(init=False, repr=False)

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        self.net.require(*self.tasks)
        for tid, reward in self.tasks.items():
            if reward <= 0:
                raise NetworkFormatError(f"task {tid} has non-positive reward {reward}")
            if tid in (self.pref.source, self.pref.destination):
                raise NetworkFormatError(f"task {tid} coincides with the query source or destination")
        object.__setattr__(self, "rewards", dict(sorted(self.tasks.items())))

    @property
    def source(self) -> int:
        return self.pref.source

    @property
    def destination(self) -> int:
        return self.pref.destination
