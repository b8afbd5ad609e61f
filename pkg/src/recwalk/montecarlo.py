"""Seeded trajectory simulation and empirical TV curves.

Cross-validates the exact engine and reaches state spaces beyond the
dense cap.  The RNG is Philox (counter-based): streams are reproducible
and could be split per worker without losing determinism.  Note the
empirical TV is upward-biased when num_trajectories is small relative
to N; no debiasing is applied.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .recurrence import SequenceWindow

# Trajectories are advanced in fixed-size blocks so the draw order (and
# therefore the output) does not depend on available memory.
_BLOCK = 1 << 20

# (pos + step) stays below 2^63 whenever N is below this.
_INT64_SAFE_N = 1 << 62


@dataclass(frozen=True)
class SimConfig:
    window: SequenceWindow
    t_max: int
    num_trajectories: int
    seed: int

    def __post_init__(self):
        if self.num_trajectories < 1:
            raise ValueError("need at least one trajectory")
        if self.t_max < 0:
            raise ValueError("t_max must be nonnegative")


def _empirical_tv(nonzero_counts: np.ndarray, total: int, N: int) -> float:
    """TV between the histogram counts/total and uniform on N states."""
    occupied = nonzero_counts / total - 1.0 / N
    missing = (N - len(nonzero_counts)) / N
    return 0.5 * (float(np.abs(occupied).sum()) + missing)


def simulate_tv(config: SimConfig) -> list[tuple[int, float]]:
    """Empirical TV to uniform at every t = 0..t_max.

    Deterministic for a given config: one Philox stream consumed in a
    fixed block order.
    """
    window = config.window
    N = window.modulus
    T = config.num_trajectories
    rng = np.random.Generator(np.random.Philox(config.seed))

    if N < _INT64_SAFE_N:
        steps = np.array([g % N for g in window.values], dtype=np.int64)
        counters: list[Counter] = [Counter() for _ in range(config.t_max + 1)]
        counters[0][0] = T
        for lo in range(0, T, _BLOCK):
            size = min(_BLOCK, T - lo)
            pos = np.zeros(size, dtype=np.int64)
            for t in range(1, config.t_max + 1):
                pos = (pos + steps[rng.integers(0, window.n, size=size)]) % N
                vals, cnts = np.unique(pos, return_counts=True)
                counters[t].update(dict(zip(vals.tolist(), cnts.tolist())))
    else:
        # big-int fallback: exact modular arithmetic on Python integers
        steps_big = [g % N for g in window.values]
        counters = [Counter() for _ in range(config.t_max + 1)]
        counters[0][0] = T
        for lo in range(0, T, _BLOCK):
            size = min(_BLOCK, T - lo)
            pos_big = [0] * size
            for t in range(1, config.t_max + 1):
                idx = rng.integers(0, window.n, size=size)
                pos_big = [
                    (p + steps_big[i]) % N for p, i in zip(pos_big, idx.tolist())
                ]
                counters[t].update(pos_big)

    out = []
    for t in range(config.t_max + 1):
        cnts = np.fromiter(counters[t].values(), dtype=np.float64)
        out.append((t, _empirical_tv(cnts, T, N)))
    return out
