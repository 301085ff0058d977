"""
Parameter sweeps.

One parameter varies over its listed values; every other parameter keeps its
default. Each (value, repetition) cell draws its own scenario from a seed
derived from the master seed, so cells are independent and may run in a
process pool. Records come back in cell order either way.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Tuple, Union
import logging
import time

from dotenv import dotenv_values
import numpy as np
import pandas as pd

from irts.core.errors import ScenarioGenerationError
from irts.schemas.bench import RECORD_COLUMNS, EvalRecord, SweepSpec
from irts.services.bench.evaluation import evaluate
from irts.services.bench.scenario import Scenario, gen_scenario
from irts.services.network.grid import grid_network
from irts.services.network.loader import read_network
from irts.services.network.road_network import RoadNetwork
from irts.services.skyline.query import Query
from irts.services.skyline.skyline_set import SkylineSet
from irts.services.solve_pipeline import HEURISTICS, query_task_graph, run_solver

logger = logging.getLogger(__name__)

EXACT_BASELINES = ("exact", "oracle")


@dataclass
class SweepResult:
    records: List[EvalRecord] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)  # parameter value -> failed scenarios


@dataclass(frozen=True)
class Cell:
    index: int
    raw: str
    rep: int


def cell_seed(master: int, index: int, rep: int) -> int:
    return int(np.random.SeedSequence([master, index, rep]).generate_state(1, dtype=np.uint64)[0])


def load_sweep_spec(path: Union[str, Path]) -> SweepSpec:
    """Flat key=value file; keys are the SweepSpec field names in any case."""
    values = dotenv_values(path)
    return SweepSpec(**{key.lower(): value for key, value in values.items() if value is not None})


def sweep_network(spec: SweepSpec) -> RoadNetwork:
    if spec.network:
        return read_network(spec.network)
    return grid_network(spec.grid_rows, spec.grid_cols, spec.grid_cell_size,
                        spec.grid_tasks, spec.grid_seed)


def _solver_label(spec: SweepSpec, solver: str, k: int) -> str:
    if solver == "kgh" and spec.parameter == "k":
        return f"kgh:k={k}"
    return solver


def _timed(query: Query, solver: str, k: int, tg, tg_ms: float) -> Tuple[SkylineSet, float]:
    started = time.perf_counter()
    sky = run_solver(query, solver, k=k, force=True, tg=tg)
    elapsed = (time.perf_counter() - started) * 1000.0
    # heuristics share one task graph; each is charged its construction time
    return sky, elapsed + (tg_ms if solver in HEURISTICS else 0.0)


def run_cell(net: RoadNetwork, spec: SweepSpec, cell: Cell,
             measure_runtime: bool = True) -> Optional[List[EvalRecord]]:
    """Records of one scenario, or None when no scenario could be drawn."""
    seed = cell_seed(spec.seed, cell.index, cell.rep)
    cfg = spec.scenario_config(cell.raw, seed)
    try:
        scenario: Scenario = gen_scenario(net, cfg)
    except ScenarioGenerationError as exc:
        logger.warning(f"Skipping {spec.parameter}={cell.raw} rep {cell.rep}: {exc}")
        return None

    query = Query(net, scenario.pref, scenario.tasks, scenario.budget)
    k = spec.k_for(cell.raw)
    solvers = list(dict.fromkeys([*spec.solvers, *([spec.baseline] if spec.baseline else [])]))

    tg, tg_ms = None, 0.0
    if any(s in HEURISTICS for s in solvers):
        started = time.perf_counter()
        tg = query_task_graph(query)
        tg_ms = (time.perf_counter() - started) * 1000.0

    results: Dict[str, Tuple[SkylineSet, float]] = {
        solver: _timed(query, solver, k, tg, tg_ms) for solver in solvers
    }
    baseline = results[spec.baseline][0] if spec.baseline else None
    optimistic = spec.baseline not in EXACT_BASELINES

    records = []
    for solver in solvers:
        sky, runtime_ms = results[solver]
        precision = recall = None
        if baseline is not None:
            precision, recall, _ = evaluate(sky, baseline)
        records.append(EvalRecord(
            solver=_solver_label(spec, solver, k),
            seed=seed,
            pref_cost=round(scenario.pref_cost, 6),
            budget_factor=cfg.budget_factor,
            num_tasks=cfg.num_tasks,
            reward_dist=cfg.reward_dist,
            clusters=cfg.clusters,
            runtime_ms=round(runtime_ms, 3) if measure_runtime else None,
            size=len(sky),
            precision=precision,
            recall=recall,
            optimistic=optimistic and baseline is not None,
            parameter_value=cell.raw,
        ))
    return records


_worker_state: Dict[str, object] = {}


def _init_worker(net: RoadNetwork, spec: SweepSpec, measure_runtime: bool) -> None:
    _worker_state.update(net=net, spec=spec, measure_runtime=measure_runtime)


def _run_in_worker(cell: Cell) -> Optional[List[EvalRecord]]:
    return run_cell(_worker_state["net"], _worker_state["spec"], cell, _worker_state["measure_runtime"])


def run_sweep(net: RoadNetwork, spec: SweepSpec, workers: int = 1,
              measure_runtime: bool = True) -> SweepResult:
    cells = [Cell(i, raw, rep) for i, raw in enumerate(spec.values) for rep in range(spec.repetitions)]
    logger.info(f"Sweep over {spec.parameter}: {len(spec.values)} values x {spec.repetitions} "
                f"repetitions on {net}, {workers} worker(s)")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(net, spec, measure_runtime)) as pool:
            outcomes = list(pool.map(_run_in_worker, cells))
    else:
        outcomes = [run_cell(net, spec, cell, measure_runtime) for cell in cells]

    result = SweepResult()
    for cell, records in zip(cells, outcomes):
        if records is None:
            result.skipped[cell.raw] += 1
        else:
            result.records.extend(records)
    if result.skipped:
        logger.warning(f"Skipped scenarios per value: {dict(result.skipped)}")
    return result


def records_frame(records: Sequence[EvalRecord]) -> pd.DataFrame:
    rows = [record.model_dump(mode="json") for record in records]
    return pd.DataFrame(rows, columns=[*RECORD_COLUMNS, "optimistic", "parameter_value"], dtype=object)


def write_records(records: Sequence[EvalRecord], stream: TextIO) -> None:
    """CSV with the fixed record header; absent values are left empty."""
    records_frame(records).to_csv(stream, columns=RECORD_COLUMNS, index=False, lineterminator="\n")


def summarize(records: Sequence[EvalRecord]) -> pd.DataFrame:
    """Mean runtime, size, precision and recall per (parameter value, solver)."""
    frame = records_frame(records)
    metrics = ["runtime_ms", "size", "precision", "recall"]
    for column in metrics:
        frame[column] = pd.to_numeric(frame[column], errors="coerce")
    grouped = frame.groupby(["parameter_value", "solver"], sort=False)
    summary = grouped[metrics].mean()
    summary["runs"] = grouped.size()
    return summary.reset_index()
