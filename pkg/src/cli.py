"""
Bilinear multiplication algorithms for F_2^n
Entry point
"""

import argparse
import logging
import sys
from typing import List, Optional

from config import load_settings
from handlers import (
    register_algorithm_handlers,
    register_tower_handlers,
    register_report_handlers
)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gf2mult',
        description='Synthesize, verify and bound bilinear multiplication algorithms for F_2^n',
    )
    parser.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR (default from LOG_LEVEL)')
    subparsers = parser.add_subparsers(dest='verb', metavar='verb', required=True)
    register_algorithm_handlers(subparsers)
    register_tower_handlers(subparsers)
    register_report_handlers(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run one verb and return its exit code.

    0 on success, 1 when a verification fails, 2 on usage or input errors.
    """
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format=LOG_FORMAT, stream=sys.stderr)

    try:
        return args.handler(args, settings)
    except ValueError as e:
        logger.debug("Command %s failed", args.verb, exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    try:
        main()
    except KeyboardInterrupt:
        logger.info("👋 Interrupted by user")
        sys.exit(130)
