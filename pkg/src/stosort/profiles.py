"""Parameter profiles for the phased algorithms.

`paper` follows the source formulas verbatim: per-segment predictions use the
x - d(x) margin with d(x) ~ x^(2/3)/2, the merge parameter K is polylog-sized,
and the merge/last-phase threshold is B*K.  Those constants are asymptotic;
at bench scale (n <= 2^20) paper-profile runs are degenerate or spend most
seeds in the failure mode, which the harness records as data.

`practical` keeps the control flow and all structural identities but swaps
the statistical margin for a Chernoff-style sqrt bound, picks K from the same
2^(2^k) family sized so merges actually occur, and caps the initial segment
count so every allocation stays in the margin's validity regime.  Constants
are frozen here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .core import d, m_bound

PAPER = "paper"
PRACTICAL = "practical"

# Frozen practical-profile constants.
LAMBDA = 3.5            # multiplier of the sqrt(x ln(B e)) margin
VIABILITY_FACTOR = 4.0  # x >= VIABILITY_FACTOR * LAMBDA^2 * ln(B e) for full margins
MIN_FORM_K = 4          # smallest usable 2^(2^k) merge parameter


def log2i(n: int) -> float:
    return math.log2(n) if n > 1 else 1.0


def is_form_power(k: int) -> bool:
    """True for K of the form 2^(2^i): 2, 4, 16, 256, 65536, ..."""
    if k < 2:
        return False
    e = k.bit_length() - 1
    return (1 << e) == k and (e & (e - 1)) == 0


def form_powers_upto(limit: int) -> list[int]:
    out, e = [], 1
    while (1 << e) <= limit:
        out.append(1 << e)
        e *= 2
    return out


def margin_practical(x: float, B: int) -> float:
    """Chernoff-style per-segment safety margin, clamped to x/2."""
    return min(math.ceil(x / 2.0), math.ceil(LAMBDA * math.sqrt(x * math.log(B * math.e))))


def viability_floor(B: int) -> float:
    """Smallest per-segment load at which the sqrt margin is trustworthy."""
    return VIABILITY_FACTOR * LAMBDA * LAMBDA * math.log(B * math.e)


def b1_largest_power(n: int, K: int) -> int:
    """Largest power of K with B1 * K <= n (>= 1)."""
    b = 1
    while b * K * K <= n:
        b *= K
    return b


@dataclass(frozen=True)
class Profile:
    """Margin, threshold and parameter rules shared by the phased algorithms."""

    name: str

    def m(self, n_j: int, B: int) -> int:
        """Per-segment lower bound on future arrivals (buffer sizing)."""
        if self.name == PAPER:
            return m_bound(n_j, B)
        x = n_j / B
        return max(1, math.ceil(x - margin_practical(x, B)))

    def margin(self, n_j: int, B: int) -> float:
        if self.name == PAPER:
            return d(n_j / B)
        return margin_practical(n_j / B, B)

    def shrink_ok(self, n_next: int, n_j: int, B: int) -> bool:
        """Failure-mode test 1: did the future-item count drop fast enough."""
        if self.name == PAPER:
            return n_next / B <= (n_j / B) ** (2.0 / 3.0)
        return n_next <= 2.0 * B * margin_practical(n_j / B, B)

    def merge_threshold(self, n: int, B: int, K: int | None) -> float:
        """Pool size below which the three-way branch merges or finishes."""
        if self.name == PAPER:
            return B * K if K is not None else 0.0
        return B * math.ceil(log2i(n) ** 2)

    def adapt_cutoff(self, n: int, B: int, beta: float) -> float:
        """Final-pool threshold B * log^beta(n) for the fixed-B algorithm."""
        return B * log2i(n) ** beta


PAPER_PROFILE = Profile(PAPER)
PRACTICAL_PROFILE = Profile(PRACTICAL)


def get_profile(name: str) -> Profile:
    if name == PAPER:
        return PAPER_PROFILE
    if name == PRACTICAL:
        return PRACTICAL_PROFILE
    raise ValueError(f"unknown profile {name!r}")


# --------------------------------------------------------------------------
# Per-algorithm parameter blocks
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseParams:
    """Parameters of the buffers-plus-pool base algorithm."""

    B: int | None = None          # None: n^(1/3) at depth 0, sqrt(n) deeper
    recursion_depth: int = 0
    min_recurse_size: int = 64

    def B_for(self, n: int, depth: int) -> int:
        if self.B is not None:
            return self.B
        return max(2, math.ceil(n ** (1.0 / 3.0)) if depth == 0 else math.ceil(math.sqrt(n)))


@dataclass(frozen=True)
class AdaptParams:
    """Parameters of the fixed-B adaptive-allocation algorithm."""

    profile: str = PRACTICAL
    c_B: float = 1.0
    beta: float | None = None     # None: 5 on paper, 2 on practical
    min_recurse_size: int = 64

    @property
    def beta_value(self) -> float:
        if self.beta is not None:
            return self.beta
        return 5.0 if self.profile == PAPER else 2.0

    def B_for(self, n: int) -> int:
        return max(2, math.ceil(self.c_B * log2i(n)))

    def viable(self, n: int) -> bool:
        B = self.B_for(n)
        return 1 < B <= n / (log2i(n) ** self.beta_value)


@dataclass(frozen=True)
class MergeParams:
    """Parameters of the merging algorithm (non-recursive variant)."""

    profile: str = PRACTICAL
    alpha: float | None = None    # exponent knob for the practical K rule
    min_recurse_size: int = 64    # used by the recursive variant only

    form_required = False         # the recursive variant restricts K to 2^(2^k)

    def _practical_K(self, n: int) -> int | None:
        alpha = self.alpha if self.alpha is not None else 3.0
        best = None
        for k in form_powers_upto(n):
            if k >= MIN_FORM_K and k ** alpha <= n:
                best = k
        return best

    def K_for(self, n: int) -> int | None:
        """Merge parameter; None when no feasible value exists."""
        if n < 4:
            return None
        if self.profile == PAPER:
            return math.ceil(log2i(n) ** 8)
        return self._practical_K(n)

    def B1_for(self, n: int, K: int) -> int:
        b1 = b1_largest_power(n, K)
        if self.profile == PAPER:
            return b1
        # Cap: keep n/B1 inside the sqrt margin's validity regime.
        b = b1
        while b > 1 and n / b < viability_floor(b):
            b //= K
        return b


@dataclass(frozen=True)
class FinalParams(MergeParams):
    """Parameters of the recursive algorithm; K restricted to 2^(2^k)."""

    well_param_c1: float = 0.1
    well_param_c2: float = 10.0
    well_param_eps: float = 0.5

    form_required = True

    def K_for(self, n: int) -> int | None:
        if n < 4:
            return None
        if self.profile == PAPER:
            lo = log2i(n) ** 8
            hi = log2i(n) ** 16
            for k in form_powers_upto(max(4, int(hi))):
                if lo < k <= hi:
                    return k
            return None
        return self._practical_K(n)


def with_profile(params, profile: str):
    return replace(params, profile=profile)
