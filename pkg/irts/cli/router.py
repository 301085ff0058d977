"""
CLI Router: combines all command modules
"""
import argparse

from irts.cli.commands import bench, evaluate, gen, solve
from irts.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irts",
        description="Skyline in-route task selection: detour vs. reward paths under a travel budget",
    )
    parser.add_argument("--version", action="version", version=f"{settings.PROJECT_NAME} {settings.VERSION}")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Log level on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve.register(subparsers)
    gen.register(subparsers)
    bench.register(subparsers)
    evaluate.register(subparsers)
    return parser
