"""Seeded sampling of mask vectors and fault patterns"""

import numpy as np


class Distributions:
    """All randomness funnels through one seeded numpy generator"""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def random_vector(self, order: int, length: int) -> tuple[int, ...]:
        """Uniform vector over a field of the given order"""
        return tuple(int(v) for v in self.rng.integers(0, order, size=length))

    def random_faults(self, n: int, order: int, weight: int, count: int) -> np.ndarray:
        """count fault vectors of exactly the given Hamming weight"""
        faults = np.zeros((count, n), dtype=np.int64)
        if weight == 0 or count == 0:
            return faults
        supports = np.argsort(self.rng.random((count, n)), axis=1)[:, :weight]
        values = self.rng.integers(1, order, size=(count, weight), dtype=np.int64)
        faults[np.arange(count)[:, None], supports] = values
        return faults
