"""
Algorithm verbs - synthesize, verify, codegen
"""

import argparse
import logging
from pathlib import Path

from bilinear.algorithm import BilinearAlgorithm, describe
from bilinear.codegen import codegen, program_stats
from bilinear.verify import EXHAUSTIVE, RANDOM, default_mode, verify
from config import Settings
from construction.places import MAX_PLAN_N, plan_places, plan_to_json
from construction.synthesis import synthesize
from handlers.common import emit, output_options, positive_int, read_json
from utils.serialization import dumps

logger = logging.getLogger(__name__)


def cmd_synthesize(args: argparse.Namespace, settings: Settings) -> int:
    alg = synthesize(args.n)
    payload = alg.to_json()
    if args.out:
        Path(args.out).write_text(dumps(payload) + "\n", encoding='utf-8')
        logger.info("✅ Algorithm written to %s", args.out)

    text = describe(alg)
    if args.n <= MAX_PLAN_N:
        plan = plan_places(args.n)
        payload = dict(payload, plan=plan_to_json(plan))
        text = f"Plan: {plan.describe()}\n{text}"
    emit(args, payload, text)
    return 0


def _load_algorithm(path: str) -> BilinearAlgorithm:
    return BilinearAlgorithm.from_json(read_json(path))


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    alg = _load_algorithm(args.file)
    if args.exhaustive:
        mode, count = EXHAUSTIVE, None
    elif args.random:
        mode, count = RANDOM, args.random
    else:
        mode, count = default_mode(alg, settings), None
    ok = verify(alg, mode, count, settings)
    mark = "✅" if ok else "❌"
    emit(
        args,
        {"n": alg.n, "rank": alg.rank, "mode": mode, "passed": ok},
        f"{mark} {mode} verification of rank-{alg.rank} algorithm for F_2^{alg.n}: {'passed' if ok else 'FAILED'}",
    )
    return 0 if ok else 1


def cmd_codegen(args: argparse.Namespace, settings: Settings) -> int:
    if args.file:
        alg = _load_algorithm(args.file)
    elif args.n:
        alg = synthesize(args.n)
    else:
        raise ValueError("codegen needs --file or --n")
    program = codegen(alg)
    emit(args, {"n": alg.n, "rank": alg.rank, "program": program, "stats": program_stats(program)}, program.rstrip("\n"))
    return 0


def register_algorithm_handlers(subparsers) -> None:
    """Attach synthesize, verify and codegen"""
    common = output_options()

    p = subparsers.add_parser('synthesize', parents=[common], help='build a multiplication algorithm for F_2^n')
    p.add_argument('--n', type=positive_int, required=True)
    p.add_argument('--out', help='also write the algorithm JSON to this file')
    p.set_defaults(handler=cmd_synthesize)

    p = subparsers.add_parser('verify', parents=[common], help='check a stored algorithm')
    p.add_argument('--file', required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument('--exhaustive', action='store_true', help='all input pairs (n <= 12)')
    group.add_argument('--random', type=positive_int, metavar='K', help='K seeded random pairs')
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser('codegen', parents=[common], help='emit a straight-line XOR/AND program')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--file')
    source.add_argument('--n', type=positive_int)
    p.set_defaults(handler=cmd_codegen)
