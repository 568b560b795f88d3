"""
Verification of bilinear algorithms against reference field multiplication
"""

import logging
from typing import Optional

import numpy as np

from algebra.gf2k import field_mul_array
from bilinear.algorithm import BilinearAlgorithm
from config import EXHAUSTIVE_CEILING, Settings
from utils.scheduler import partition, run_blocks

logger = logging.getLogger(__name__)

# Products of degree 2n - 2 must fit in int64
MAX_VERIFY_DEGREE = 32

EXHAUSTIVE = 'exhaustive'
RANDOM = 'random'


def _parity(v: np.ndarray) -> np.ndarray:
    for shift in (32, 16, 8, 4, 2, 1):
        v = v ^ (v >> shift)
    return v & 1


def _form_bits(values: np.ndarray, forms) -> np.ndarray:
    """len(values) x rank matrix of <form_l, value>"""
    masks = np.asarray(forms, dtype=np.int64)
    return _parity(values[:, None] & masks[None, :]).astype(np.float32)


def _output_matrix(alg: BilinearAlgorithm) -> np.ndarray:
    """rank x n matrix of output bits"""
    c = np.asarray(alg.c_vecs, dtype=np.int64)
    return ((c[:, None] >> np.arange(alg.n)[None, :]) & 1).astype(np.float32)


def _pack(bits: np.ndarray) -> np.ndarray:
    weights = np.left_shift(np.int64(1), np.arange(bits.shape[-1], dtype=np.int64))
    return (bits.astype(np.int64) * weights).sum(axis=-1)


def evaluate_pairs(alg: BilinearAlgorithm, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """alg applied to (xs[i], ys[i]) for every i"""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    products = _form_bits(xs, alg.a_forms) * _form_bits(ys, alg.b_forms)
    sums = products @ _output_matrix(alg)
    return _pack(np.mod(sums, 2))


def evaluate_grid(alg: BilinearAlgorithm, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """alg applied to every (x, y) in xs x ys, shape (len(xs), len(ys))"""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    ax = _form_bits(xs, alg.a_forms)
    by = _form_bits(ys, alg.b_forms)
    c = _output_matrix(alg)
    z = np.zeros((len(xs), len(ys)), dtype=np.int64)
    for i in range(alg.n):
        # bit i of every product: ax diag(c_i) by^T mod 2
        bit = np.mod((ax * c[:, i][None, :]) @ by.T, 2).astype(np.int64)
        z |= bit << i
    return z


def verify_exhaustive(alg: BilinearAlgorithm, block_rows: int = 256, workers: int = 1) -> bool:
    if alg.n > EXHAUSTIVE_CEILING:
        raise ValueError(f"Exhaustive verification supports n <= {EXHAUSTIVE_CEILING}, got {alg.n}")
    size = 1 << alg.n
    ys = np.arange(size, dtype=np.int64)

    def check(rows: range) -> bool:
        xs = np.arange(rows.start, rows.stop, dtype=np.int64)
        expected = field_mul_array(alg.field, xs[:, None], ys[None, :])
        return bool(np.array_equal(evaluate_grid(alg, xs, ys), expected))

    results = run_blocks(check, partition(size, block_rows), workers)
    logger.debug("Exhaustive check of %d blocks for n=%d", len(results), alg.n)
    return all(results)


def verify_random(alg: BilinearAlgorithm, count: int, seed: int) -> bool:
    if alg.n > MAX_VERIFY_DEGREE:
        raise ValueError(f"Verification supports n <= {MAX_VERIFY_DEGREE}, got {alg.n}")
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, 1 << alg.n, size=count, dtype=np.int64)
    ys = rng.integers(0, 1 << alg.n, size=count, dtype=np.int64)
    expected = field_mul_array(alg.field, xs, ys)
    ok = True
    for block in partition(count, 1 << 14):
        sl = slice(block.start, block.stop)
        if not np.array_equal(evaluate_pairs(alg, xs[sl], ys[sl]), expected[sl]):
            ok = False
            break
    return ok


def verify(
    alg: BilinearAlgorithm,
    mode: str = EXHAUSTIVE,
    count: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> bool:
    """
    Check x * y = sum_l <a_l, x> <b_l, y> c_l.

    Args:
        alg: algorithm to check
        mode: 'exhaustive' (all 2^(2n) pairs, n <= 12) or 'random'
        count: number of random pairs, defaults to settings.verify_random_pairs
        settings: seed, block size and worker count

    Returns:
        True iff every checked pair agrees with field multiplication
    """
    settings = settings or Settings()
    if mode == EXHAUSTIVE:
        ok = verify_exhaustive(alg, settings.verify_block_rows, settings.verify_workers)
    elif mode == RANDOM:
        ok = verify_random(alg, count or settings.verify_random_pairs, settings.verify_seed)
    else:
        raise ValueError(f"Unknown verification mode {mode!r}")
    logger.info("%s verification of rank-%d algorithm for F_2^%d: %s",
                mode.capitalize(), alg.rank, alg.n, "passed" if ok else "FAILED")
    return ok


def default_mode(alg: BilinearAlgorithm, settings: Optional[Settings] = None) -> str:
    settings = settings or Settings()
    return EXHAUSTIVE if alg.n <= settings.verify_exhaustive_max_n else RANDOM
