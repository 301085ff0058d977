"""
solve: one skyline query; prints `detour travel reward path...` per point.
"""
import argparse
import logging
import sys

from irts.schemas.request import SolveRequest
from irts.services.exact.pruning import PruningToggles
from irts.services.network.loader import read_network, read_tasks
from irts.services.skyline.serialization import write_skyline_json, write_skyline_text
from irts.services.skyline.stats import SearchStats
from irts.services.solve_pipeline import HEURISTICS, SOLVERS, build_query, query_task_graph, run_solver

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="Compute the skyline of one query")
    parser.add_argument("--network", required=True, help="Network file")
    parser.add_argument("--tasks", help="Task file (defaults to the network's rewarded vertices)")
    parser.add_argument("--source", type=int, required=True)
    parser.add_argument("--destination", type=int, required=True)
    parser.add_argument("--budget", required=True, help="Absolute budget (21) or factor of the preferred cost (1.25x)")
    parser.add_argument("--solver", default="exact", choices=SOLVERS)
    parser.add_argument("--k", type=int, help="Neighbours per task for kgh")
    parser.add_argument("--preferred", help="Preferred path as comma separated vertex ids")
    parser.add_argument("--trace", action="store_true", help="Log every search step at DEBUG")
    parser.add_argument("--force", action="store_true", help="Run the exact solver on large instances")
    parser.add_argument("--disable-pruning", nargs="+", default=[], choices=["p1", "p2", "p3", "p4"],
                        metavar="RULE", help="Exact solver pruning rules to switch off")
    parser.add_argument("--dump-task-graph", metavar="PATH", help="Write the task graph edges to PATH")
    parser.add_argument("--format", default="text", choices=["text", "json"])
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    req = SolveRequest(
        network=args.network,
        tasks=args.tasks,
        source=args.source,
        destination=args.destination,
        budget=args.budget,
        solver=args.solver,
        k=args.k,
        trace=args.trace,
        preferred=args.preferred,
        force=args.force,
    )

    net = read_network(req.network)
    tasks = None
    if req.tasks:
        net, tasks = read_tasks(req.tasks, net)
    query = build_query(net, req.source, req.destination, req.budget, tasks, req.preferred)

    tg = None
    if args.dump_task_graph or req.solver in HEURISTICS:
        tg = query_task_graph(query)
        if args.dump_task_graph:
            with open(args.dump_task_graph, "w", encoding="utf-8") as handle:
                handle.write("\n".join(tg.dump_edges()) + "\n")

    stats = SearchStats(trace=req.trace)
    sky = run_solver(query, req.solver, k=req.k, stats=stats, force=req.force,
                     pruning=PruningToggles.without(*args.disable_pruning), tg=tg)

    if args.format == "json":
        write_skyline_json(sky, sys.stdout, solver=req.solver)
    else:
        write_skyline_text(sky, sys.stdout)
    return 0
