"""Exhaustive ground truth for small instances."""
from irts.services.oracle.brute_force import OracleLimits, brute_min_detour_leg, brute_skyline

__all__ = ["OracleLimits", "brute_min_detour_leg", "brute_skyline"]
