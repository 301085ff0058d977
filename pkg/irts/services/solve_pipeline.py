"""
Solve Pipeline Orchestrator
Runs the full preferred path -> budget -> query -> task graph -> solver flow.
Shared by the `solve` command and the benchmark sweeps.
"""
from typing import Callable, Dict, Mapping, Optional, Sequence, Union
import logging

from irts.core.config import settings
from irts.core.errors import InstanceTooLargeError, UnknownSolverError
from irts.schemas.request import BudgetSpec
from irts.services.exact.pruning import ALL_RULES, PruningToggles
from irts.services.exact.solver import exact_skyline
from irts.services.heuristics.solvers import doh, kgh, mdh, mrh
from irts.services.network.road_network import PreferredPath, RoadNetwork
from irts.services.network.search import shortest_preferred_path
from irts.services.oracle.brute_force import brute_skyline
from irts.services.skyline.query import Query
from irts.services.skyline.skyline_set import SkylineSet
from irts.services.skyline.stats import SearchStats
from irts.services.taskgraph.builder import build_task_graph
from irts.services.taskgraph.graph import TaskGraph

logger = logging.getLogger(__name__)

HEURISTICS = ("doh", "kgh", "mdh", "mrh")
SOLVERS = ("exact", "oracle") + HEURISTICS


def build_query(
    net: RoadNetwork,
    source: int,
    destination: int,
    budget: Union[BudgetSpec, float],
    tasks: Optional[Mapping[int, float]] = None,
    preferred: Optional[Sequence[int]] = None,
) -> Query:
    """
    Steps:
      1. Preferred path: the given vertex sequence, else a shortest travel path
      2. Budget: absolute, or a factor of the preferred path's travel cost
      3. Tasks: the given rewards, else every rewarded vertex of the network other than s and d
    """
    net.require(source, destination)
    if preferred is not None:
        pref = PreferredPath(net, preferred)
    else:
        pref = shortest_preferred_path(net, source, destination)

    if isinstance(budget, BudgetSpec):
        b = budget.resolve(pref.total_cost)
    else:
        b = float(budget)

    if tasks is None:
        rewards = {t: r for t, r in net.rewards.items() if t not in (source, destination)}
    else:
        rewards = dict(tasks)
    logger.info(f"Query {source}->{destination}: preferred cost {pref.total_cost:g}, "
                f"budget {b:g}, {len(rewards)} tasks")
    return Query(net, pref, rewards, b)


def query_task_graph(query: Query) -> TaskGraph:
    return build_task_graph(query.net, query.pref, query.rewards, query.budget)


def _heuristic(solver: str, k: Optional[int]) -> Callable[[TaskGraph, float, SearchStats], SkylineSet]:
    if solver == "kgh":
        k = settings.DEFAULT_K if k is None else k
        return lambda tg, b, stats: kgh(tg, k, b, stats)
    return {"doh": doh, "mdh": mdh, "mrh": mrh}[solver]


def run_solver(
    query: Query,
    solver: str,
    k: Optional[int] = None,
    stats: Optional[SearchStats] = None,
    force: bool = False,
    pruning: PruningToggles = ALL_RULES,
    tg: Optional[TaskGraph] = None,
) -> SkylineSet:
    """
    Dispatch one query to a solver by name.

    Heuristics reuse `tg` when given (it must have been built for this query).
    The exact solver refuses preferred paths longer than EXACT_MAX_PREF_COST
    unless `force` is set.
    """
    stats = stats if stats is not None else SearchStats()

    if solver == "exact":
        if query.pref.total_cost > settings.EXACT_MAX_PREF_COST and not force:
            logger.warning(f"Exact solver refused: preferred cost {query.pref.total_cost:g} "
                           f"> {settings.EXACT_MAX_PREF_COST:g}")
            raise InstanceTooLargeError(
                f"preferred path cost {query.pref.total_cost:g} exceeds "
                f"{settings.EXACT_MAX_PREF_COST:g}; use --force to run the exact solver anyway"
            )
        return exact_skyline(query, pruning=pruning, stats=stats)

    if solver == "oracle":
        return brute_skyline(query.net, query.pref, query.rewards, query.budget)

    if solver not in HEURISTICS:
        raise UnknownSolverError(f"unknown solver '{solver}' (choose from {', '.join(SOLVERS)})")

    tg = tg if tg is not None else query_task_graph(query)
    return _heuristic(solver, k)(tg, query.budget, stats)


def solve_all(query: Query, solvers: Sequence[str], k: Optional[int] = None,
              force: bool = False) -> Dict[str, SkylineSet]:
    """Run several solvers on one query, building the task graph once."""
    tg = query_task_graph(query) if any(s in HEURISTICS for s in solvers) else None
    return {name: run_solver(query, name, k=k, force=force, tg=tg) for name in solvers}
