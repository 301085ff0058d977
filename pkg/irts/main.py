"""
IRTS skyline command-line entry point
Usage: python -m irts.main {solve,gen,bench,eval} ...
"""
from typing import List, Optional
import logging
import sys

from pydantic import ValidationError

from irts.cli.router import build_parser
from irts.core.errors import IRTSError

logger = logging.getLogger(__name__)

SOLVER_LOGGERS = ("irts.services.exact", "irts.services.heuristics", "irts.services.skyline")


def configure_logging(level: str, trace: bool = False) -> None:
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
    if trace:
        for name in SOLVER_LOGGERS:
            logging.getLogger(name).setLevel(logging.DEBUG)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level, getattr(args, "trace", False))

    try:
        return args.handler(args)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ())) or "input"
        print(f"error: invalid {where}: {first.get('msg')}", file=sys.stderr)
    except IRTSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
