"""Shared model: the cell array, segment arithmetic, parameter formulas, cost.

Everything downstream (baselines, the phased algorithms, the harness) builds
on the types and the two parameter formulas defined here.  Capacity
bookkeeping is exact integer arithmetic; item values are float64 in [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


# --------------------------------------------------------------------------
# Parameter formulas
# --------------------------------------------------------------------------

def d(x: float) -> float:
    """Margin function d(x) = x - ceil(x - x^(2/3)/2).

    Integer-valued for integer x; rejects x <= 0.
    """
    if x <= 0:
        raise ValueError(f"d() requires x > 0, got {x}")
    return x - math.ceil(x - 0.5 * x ** (2.0 / 3.0))


def m_bound(n_j: int, B: int) -> int:
    """Per-segment prediction ceil(n_j/B - (n_j/B)^(2/3)/2).

    Satisfies m_bound(n_j, B) == n_j/B - d(n_j/B) exactly (as reals).
    """
    if n_j < 1 or B < 1:
        raise ValueError(f"m_bound requires n_j >= 1 and B >= 1, got ({n_j}, {B})")
    x = n_j / B
    return math.ceil(x - 0.5 * x ** (2.0 / 3.0))


def segment_of(v: float, B: int) -> int:
    """1-based index of the half-open interval [(i-1)/B, i/B) containing v."""
    if not 0.0 <= v < 1.0:
        raise ValueError(f"item value must lie in [0, 1), got {v}")
    if B < 1:
        raise ValueError(f"granularity must be >= 1, got {B}")
    return min(int(v * B), B - 1) + 1


def seg0(v: float, B: int) -> int:
    """0-based segment index; clamped so every v in [0,1) maps somewhere."""
    i = int(v * B)
    return B - 1 if i >= B else i


# --------------------------------------------------------------------------
# Cost
# --------------------------------------------------------------------------

def eval_cost(cells) -> float:
    """Sum of absolute adjacent differences of a fully filled array."""
    n = len(cells)
    for i, c in enumerate(cells):
        if c is None:
            raise ValueError(f"cell {i + 1} is empty; cost is defined on full arrays only")
    if n <= 1:
        return 0.0
    total = 0.0
    prev = cells[0]
    for i in range(1, n):
        cur = cells[i]
        total += abs(cur - prev)
        prev = cur
    return total


def offline_cost(items) -> float:
    """Cost of the sorted placement: max - min."""
    if len(items) == 0:
        raise ValueError("offline_cost requires a non-empty item sequence")
    return max(items) - min(items)


# --------------------------------------------------------------------------
# Records
# --------------------------------------------------------------------------

FAILURE_SHRINK = "shrink_too_slow"
FAILURE_NONPOSITIVE = "nonpositive_buffer"
FAILURE_NO_CELL = "no_cell"

KIND_REGULAR = "regular"
KIND_DAMPENING = "dampening"
KIND_FINAL_POOL = "final_pool"
KIND_PHASE1_VIRTUAL = "phase1_virtual"


@dataclass
class BufferRecord:
    """Metadata of one allocated buffer (cells live in the run's array)."""

    bid: int
    start: int          # 0-based cell offset
    size: int
    seg: int            # 0-based initial-segment index at granularity `gran`
    gran: int           # global granularity of the initial segment
    kind: str
    phase: int
    instance: int       # owning instance id (0 = top level)
    alloc_seq: int      # global allocation order


@dataclass
class PhaseRecord:
    """Per-phase bookkeeping of one instance of a phased algorithm."""

    j: int
    n_j: int
    B_j: int
    m_j: int
    m_j_old: int | None = None
    merged: bool = False
    is_last: bool = False
    buffer_sizes: list[int] = field(default_factory=list)


@dataclass
class InstanceRecord:
    """One (sub-)instance: the top level, a recursed buffer, or a pool run."""

    iid: int
    kind: str           # "final", "adapt", "pool", "adapt_merge"
    parent: int
    depth: int
    start: int
    length: int
    n_items: int
    B1: int
    m1: int             # pool instances: the classification bound m'
    gran: int           # global granularity of the instance's value range
    seg: int            # 0-based offset of the range at that granularity
    failed: str | None = None
    failed_step: int | None = None
    degenerate: bool = False
    phases: list[PhaseRecord] = field(default_factory=list)


@dataclass
class RunTrace:
    """Deterministic record of one run: placements, structure, final cost."""

    algorithm: str
    n: int
    cells: list
    cost: float
    failure: tuple[int, str] | None = None
    degenerate: bool = False
    placements: list | None = None          # (step, value, cell0, bid) tuples
    buffers: list[BufferRecord] = field(default_factory=list)
    instances: list[InstanceRecord] = field(default_factory=list)

    @property
    def phases(self) -> list[PhaseRecord]:
        """Phase records of the top-level instance."""
        for inst in self.instances:
            if inst.iid == 0:
                return inst.phases
        return []

    @property
    def phase_count(self) -> int:
        return len(self.phases)


class CellArray:
    """The n-cell placement target.  Cells fill once and never change."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"cell count must be >= 1, got {n}")
        self.n = n
        self.cells: list = [None] * n
        self.filled_count = 0

    def place(self, index0: int, value: float) -> None:
        if self.cells[index0] is not None:
            raise RuntimeError(f"cell {index0 + 1} already filled (irrevocability)")
        self.cells[index0] = value
        self.filled_count += 1

    def full(self) -> bool:
        return self.filled_count == self.n
