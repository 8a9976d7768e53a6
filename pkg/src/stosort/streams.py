"""Seeded input generation: uniform streams and the multi-way pool distribution.

The generator is Philox (counter-based, 64-bit keyed), so identical seeds give
bit-identical streams on every platform, and independent seeds are safe to run
on independent workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def parse_seed(text: str | int) -> int:
    """Accept decimal or hex ('0x...') seed strings; returns a 64-bit int."""
    if isinstance(text, int):
        value = text
    else:
        s = text.strip().lower()
        value = int(s, 16) if s.startswith("0x") else int(s, 10)
    if value < 0:
        raise ValueError(f"seed must be non-negative, got {value}")
    return value & 0xFFFFFFFFFFFFFFFF


def uniform_stream(seed: int, n: int) -> np.ndarray:
    """n i.i.d. float64 values in [0, 1), reproducible per seed."""
    if n < 0:
        raise ValueError(f"stream length must be >= 0, got {n}")
    gen = np.random.Generator(np.random.Philox(key=parse_seed(seed)))
    return gen.random(n)


@dataclass(frozen=True)
class PoolDistParams:
    """Parameters (n, B, m) of the multi-way pool distribution."""

    n: int
    B: int
    m: int

    def __post_init__(self):
        if self.B < 1 or self.m < 0 or self.n - self.B * self.m < 0:
            raise ValueError(f"invalid pool distribution parameters {self}")


@dataclass
class PoolSample:
    """One draw: the overflow sequence y plus the absorbed prefix items."""

    y: np.ndarray
    absorbed: np.ndarray
    underflow: bool      # set when not every segment absorbed its m items


def pool_dist_sample_traced(seed: int, p: PoolDistParams) -> PoolSample:
    """Simulate the generator: each segment absorbs its first m arrivals.

    Draws x_1..x_n uniform, appends x_i to y when at least m earlier draws
    share its segment, and stops once |y| = n - B*m or the draws run out.
    `underflow` flags any draw where some segment absorbed fewer than m items
    (short y, or y filled early); on clean draws |absorbed| + |y| = n.
    """
    x = uniform_stream(seed, p.n)
    target = p.n - p.B * p.m
    counts = [0] * p.B
    y: list[float] = []
    absorbed: list[float] = []
    for v in x:
        s = int(v * p.B)
        if s >= p.B:
            s = p.B - 1
        if counts[s] >= p.m:
            y.append(v)
            if len(y) == target:
                break
        else:
            counts[s] += 1
            absorbed.append(v)
    underflow = len(absorbed) != p.B * p.m
    return PoolSample(np.asarray(y), np.asarray(absorbed), underflow)


def pool_dist_sample(seed: int, p: PoolDistParams) -> tuple[np.ndarray, bool]:
    """The overflow sequence y and its underflow flag."""
    s = pool_dist_sample_traced(seed, p)
    return s.y, s.underflow
