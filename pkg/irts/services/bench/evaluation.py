"""Precision and recall of a skyline against a baseline skyline."""
from typing import NamedTuple, Optional

from irts.core.config import EPS
from irts.services.skyline.dominance import dominates
from irts.services.skyline.skyline_set import SkylineSet


class Evaluation(NamedTuple):
    precision: Optional[float]  # None when the result is empty
    recall: Optional[float]  # None when the baseline is empty
    optimistic: bool = False  # measured against a heuristic baseline


def evaluate(result: SkylineSet, baseline: SkylineSet, optimistic: bool = False) -> Evaluation:
    """
    recall: share of baseline points whose (detour, reward) the result also has.
    precision: share of result points no baseline point dominates.
    """
    found = baseline.pairs()
    mine = result.pairs()

    recall = None
    if found:
        hits = sum(
            1 for bd, br in found
            if any(abs(rd - bd) <= EPS and abs(rr - br) <= EPS for rd, rr in mine)
        )
        recall = hits / len(found)

    precision = None
    if mine:
        kept = sum(1 for r in mine if not any(dominates(b, r) for b in found))
        precision = kept / len(mine)

    return Evaluation(precision, recall, optimistic)
