"""
gen: draw one benchmark scenario and write it as network, task and query files.
"""
import argparse
import logging
from pathlib import Path

from irts.core.config import settings
from irts.schemas.bench import RewardDistribution, ScenarioConfig
from irts.services.bench.scenario import gen_scenario
from irts.services.network.grid import grid_network
from irts.services.network.loader import read_network, write_network, write_tasks
from irts.services.skyline.serialization import format_cost

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Generate a benchmark scenario")
    parser.add_argument("--network", help="Network file (default: a synthetic grid)")
    parser.add_argument("--grid", nargs=2, type=int, metavar=("ROWS", "COLS"),
                        default=[settings.GRID_ROWS, settings.GRID_COLS])
    parser.add_argument("--cell-size", type=float, default=settings.GRID_CELL_SIZE)
    parser.add_argument("--grid-tasks", type=int, default=settings.GRID_TASKS)
    parser.add_argument("--grid-seed", type=int, default=0)
    parser.add_argument("--seed", type=int, default=0, help="Scenario seed")
    parser.add_argument("--pref-cost", type=float, default=2500.0)
    parser.add_argument("--budget-factor", type=float, default=1.25)
    parser.add_argument("--num-tasks", type=int, default=20)
    parser.add_argument("--reward-dist", default="uniform", choices=[d.value for d in RewardDistribution])
    parser.add_argument("--clusters", type=int)
    parser.add_argument("--out-dir", required=True, help="Directory for network.net, tasks.txt and query.txt")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    cfg = ScenarioConfig(
        pref_cost_target=args.pref_cost,
        budget_factor=args.budget_factor,
        num_tasks=args.num_tasks,
        reward_dist=args.reward_dist,
        clusters=args.clusters,
        seed=args.seed,
    )
    if args.network:
        net = read_network(args.network)
    else:
        rows, cols = args.grid
        net = grid_network(rows, cols, args.cell_size, args.grid_tasks, args.grid_seed)

    scenario = gen_scenario(net, cfg)

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "network.net", "w", encoding="utf-8") as handle:
        write_network(net, handle)
    with open(out / "tasks.txt", "w", encoding="utf-8") as handle:
        write_tasks(scenario.tasks, handle)
    pref = scenario.pref
    query = (
        f"SOURCE={pref.source}\n"
        f"DESTINATION={pref.destination}\n"
        f"BUDGET={format_cost(scenario.budget)}\n"
        f"PREFERRED={','.join(str(v) for v in pref.vertices)}\n"
    )
    (out / "query.txt").write_text(query, encoding="utf-8")
    print(query, end="")
    logger.info(f"Scenario written to {out}")
    return 0
