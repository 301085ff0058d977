"""Path cost accounting, dominance and skyline-set maintenance."""
from irts.services.skyline.costs import PathCosts, PathState, recompute_costs
from irts.services.skyline.dominance import dominates
from irts.services.skyline.query import Query
from irts.services.skyline.skyline_set import SkylinePoint, SkylineSet, skyline_insert
from irts.services.skyline.stats import SearchStats

__all__ = [
    "PathCosts",
    "PathState",
    "recompute_costs",
    "dominates",
    "Query",
    "SkylinePoint",
    "SkylineSet",
    "skyline_insert",
    "SearchStats",
]
