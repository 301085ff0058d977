"""
eval: precision and recall of one skyline file against a baseline file.
"""
import argparse

from irts.services.bench.evaluation import evaluate
from irts.services.skyline.serialization import read_skyline


def register(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="Compare a skyline with a baseline skyline")
    parser.add_argument("result", help="Skyline file to score (text or JSON)")
    parser.add_argument("baseline", help="Baseline skyline file (text or JSON)")
    parser.add_argument("--optimistic", action="store_true", help="Baseline comes from a heuristic")
    parser.set_defaults(handler=handle)


def _show(value) -> str:
    return "absent" if value is None else repr(float(value))


def handle(args: argparse.Namespace) -> int:
    outcome = evaluate(read_skyline(args.result), read_skyline(args.baseline), args.optimistic)
    line = f"precision {_show(outcome.precision)} recall {_show(outcome.recall)}"
    if outcome.optimistic:
        line += " (optimistic)"
    print(line)
    return 0
