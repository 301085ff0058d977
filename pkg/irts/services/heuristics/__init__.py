"""Approximate solvers over the task graph."""
from irts.services.heuristics.search import ExpansionPolicy, TGPathState, search_task_graph
from irts.services.heuristics.solvers import doh, kgh, mdh, mrh

__all__ = ["ExpansionPolicy", "TGPathState", "search_task_graph", "doh", "kgh", "mdh", "mrh"]
