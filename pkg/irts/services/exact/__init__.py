"""Exact skyline search with safe pruning."""
from irts.services.exact.pruning import (
    PruningToggles,
    VisitedTaskRegistry,
    check_p3,
    check_p4,
    may_extend,
)
from irts.services.exact.solver import ExactQuery, exact_skyline

__all__ = [
    "PruningToggles",
    "VisitedTaskRegistry",
    "check_p3",
    "check_p4",
    "may_extend",
    "ExactQuery",
    "exact_skyline",
]
