"""Dominance between (detour, reward) pairs: lower detour and higher reward are better."""
from typing import Tuple

from irts.core.config import EPS

Criteria = Tuple[float, float]


def dominates(a: Criteria, b: Criteria) -> bool:
    """True iff a is no worse than b in both criteria and strictly better in one."""
    a_detour, a_reward = a
    b_detour, b_reward = b
    if a_detour < b_detour - EPS and a_reward >= b_reward - EPS:
        return True
    return a_detour <= b_detour + EPS and a_reward > b_reward + EPS
