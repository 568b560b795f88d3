"""
Shared CLI plumbing: the --json option and output helpers
"""

import argparse
import json
from pathlib import Path
from typing import Any, Callable

from config import Settings
from utils.serialization import dumps

Handler = Callable[[argparse.Namespace, Settings], int]


def output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--json', action='store_true', help='machine-readable JSON output')
    return parent


def emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    print(dumps(payload) if args.json else text)


def read_json(path: str) -> Any:
    file = Path(path)
    if not file.exists():
        raise ValueError(f"File {path} not found")
    try:
        return json.loads(file.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ValueError(f"{path} is not valid JSON: {e}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
