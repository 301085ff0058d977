"""
bench: run a parameter sweep and write one CSV record per (scenario, solver).
"""
import argparse
import logging
import sys

from irts.services.bench.sweep import load_sweep_spec, run_sweep, summarize, sweep_network, write_records

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Run a benchmark sweep")
    parser.add_argument("spec", help="Sweep specification (key=value file)")
    parser.add_argument("--out", help="CSV file for the records (default: stdout)")
    parser.add_argument("--workers", type=int, default=1, help="Process pool size")
    parser.add_argument("--no-runtime", action="store_true",
                        help="Leave runtime_ms empty so repeated runs are byte-identical")
    parser.add_argument("--summary", action="store_true", help="Print per-value means to stderr")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec = load_sweep_spec(args.spec)
    net = sweep_network(spec)
    result = run_sweep(net, spec, workers=max(1, args.workers), measure_runtime=not args.no_runtime)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            write_records(result.records, handle)
    else:
        write_records(result.records, sys.stdout)

    if args.summary:
        print(summarize(result.records).to_string(index=False), file=sys.stderr)
    logger.info(f"{len(result.records)} records, {sum(result.skipped.values())} skipped scenarios")
    return 0
