"""
Work partitioning for verification runs
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')


def partition(total: int, block: int) -> List[range]:
    """Split range(total) into consecutive blocks of at most `block` items"""
    if block < 1:
        raise ValueError(f"Block size must be positive, got {block}")
    return [range(start, min(start + block, total)) for start in range(0, total, block)]


def run_blocks(job: Callable[[range], T], blocks: Iterable[range], workers: int = 1) -> List[T]:
    """
    Run job on every block; results come back in block order.
    """
    blocks = list(blocks)
    if workers <= 1 or len(blocks) <= 1:
        return [job(b) for b in blocks]
    logger.debug("Running %d blocks on %d workers", len(blocks), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, blocks))
