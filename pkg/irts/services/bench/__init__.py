"""Scenario generation and the evaluation harness."""
from irts.services.bench.evaluation import Evaluation, evaluate
from irts.services.bench.scenario import Scenario, draw_rewards, feasible_pool, gen_scenario
from irts.services.bench.sweep import (
    SweepResult,
    cell_seed,
    load_sweep_spec,
    records_frame,
    run_sweep,
    summarize,
    sweep_network,
    write_records,
)

__all__ = [
    "Evaluation",
    "evaluate",
    "Scenario",
    "draw_rewards",
    "feasible_pool",
    "gen_scenario",
    "SweepResult",
    "cell_seed",
    "load_sweep_spec",
    "records_frame",
    "run_sweep",
    "summarize",
    "sweep_network",
    "write_records",
]
