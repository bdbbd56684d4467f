"""Deterministic random streams.

Every random draw in the package comes from the Philox 4x64 counter-based
generator (a splittable, explicitly keyed algorithm), seeded through
``numpy.random.SeedSequence`` with an integer seed plus a spawn key that
names the consumer.  Identical seeds and arguments therefore reproduce
identical streams, and independent consumers never share a stream.
"""

from __future__ import annotations

import numpy as np
from numpy.random import Generator, Philox, SeedSequence


def stream(seed: int, *spawn_key: int) -> Generator:
    """Generator for the (seed, spawn_key) stream."""
    return Generator(Philox(SeedSequence(entropy=int(seed), spawn_key=spawn_key)))


def alternating_integer_data(seed: int, count: int, *spawn_key: int) -> list[int]:
    """Random integers uniform on [0, 1000] (inclusive) with alternating
    signs attached, starting positive."""
    gen = stream(seed, *spawn_key)
    values = gen.integers(0, 1000, size=count, endpoint=True)
    return [int(v) if i % 2 == 0 else -int(v) for i, v in enumerate(values)]


def uniform_deltas(seed: int, count: int, theta: float, *spawn_key: int) -> list[float]:
    """Relative perturbations drawn uniformly from [-theta, theta]."""
    gen = stream(seed, *spawn_key)
    return [float(d) for d in gen.uniform(-theta, theta, size=count)]


def increasing_uniform_nodes(seed: int, count: int, *spawn_key: int) -> list[float]:
    """Sorted distinct uniform draws from (0, 1)."""
    gen = stream(seed, *spawn_key)
    while True:
        draws = np.sort(gen.uniform(0.0, 1.0, size=count))
        if all(a < b for a, b in zip(draws, draws[1:])):
            return [float(v) for v in draws]
