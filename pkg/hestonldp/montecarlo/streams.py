"""Counter-based random streams for block-parallel simulation.

Every block of paths draws from its own Philox generator keyed by
(seed, block index, stream id), so samples do not depend on how blocks are
scheduled across threads.
"""
import numpy as np



PATH_STREAM = 0
EXPONENTIAL_STREAM = 1


def block_generator(seed: int, block: int, stream: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(block, stream))
    return np.random.Generator(np.random.Philox(sequence))
