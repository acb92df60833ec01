import concurrent.futures
import logging
import math
from typing import Callable, List, Tuple, TypeVar

import numpy as np



_LOGGER = logging.getLogger("hestonldp.montecarlo")

T = TypeVar("T")


class BlockRunner:
    """Runs a per-block function over disjoint blocks of paths.

    Results are returned in block order whatever the number of workers, so
    any reduction over them is deterministic.

    Args:
        block_size: Number of paths per block. Changing it changes the
            random streams and therefore the sample.
        max_workers: Number of threads. Does not affect results.
    """
    def __init__(self, block_size: int = 10_000, max_workers: int = 1) -> None:
        if block_size < 1:
            raise ValueError(f"block_size must be positive, got {block_size}")
        if max_workers < 1:
            raise ValueError(f"max_workers must be positive, got {max_workers}")
        self.block_size = block_size
        self.max_workers = max_workers

    def blocks(self, n_paths: int) -> List[Tuple[int, int]]:
        """(block index, block size) pairs covering `n_paths` paths."""
        count = math.ceil(n_paths / self.block_size)
        return [
            (index, min(self.block_size, n_paths - index * self.block_size))
            for index in range(count)
        ]

    def map(self, fn: Callable[[int, int], T], n_paths: int) -> List[T]:
        blocks = self.blocks(n_paths)
        _LOGGER.debug("Running %i blocks on %i workers", len(blocks), self.max_workers)
        if self.max_workers == 1 or len(blocks) == 1:
            return [fn(index, size) for index, size in blocks]
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(lambda block: fn(*block), blocks))

    def concatenate(self, fn: Callable[[int, int], np.ndarray], n_paths: int, axis: int = 0) -> np.ndarray:
        return np.concatenate(self.map(fn, n_paths), axis=axis)


DEFAULT_RUNNER = BlockRunner()
