"""Exact distribution evolution, TV distance, and mixing times.

The walk is X_{t+1} = X_t + z_t mod N with z_t uniform on the step
multiset {G_1 mod N, ..., G_n mod N}, started from the point mass at 0.
Distributions are dense float64 vectors over Z_N.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoMixing, StateSpaceTooLarge
from .recurrence import SequenceWindow
from .spectrum import DEFAULT_N_MAX

# Hard stop for the mixing scan; unreachable for any valid window since
# slem < 1 drives TV to zero geometrically.
_SCAN_CAP = 1_000_000


@dataclass(frozen=True)
class Distribution:
    """A probability vector over Z_N (negative entries only as fp dust)."""

    N: int
    probs: np.ndarray

    def __post_init__(self):
        if len(self.probs) != self.N:
            raise ValueError(f"expected {self.N} entries, got {len(self.probs)}")


@dataclass(frozen=True)
class MixingResult:
    n: int
    N: int
    epsilon: float
    t_mix: int
    tv_curve: tuple[tuple[int, float], ...]


def point_mass(N: int) -> Distribution:
    p = np.zeros(N)
    p[0] = 1.0
    return Distribution(N=N, probs=p)


def uniform(N: int) -> Distribution:
    return Distribution(N=N, probs=np.full(N, 1.0 / N))


def step_distribution(
    window: SequenceWindow, n_max_states: int = DEFAULT_N_MAX
) -> Distribution:
    """Step law: probs[x] = #{i : G_i = x mod N} / n.

    Multiplicities matter; in particular G_n contributes to x = 0.
    """
    N = window.modulus
    if N > n_max_states:
        raise StateSpaceTooLarge(f"N = {N} exceeds the dense cap {n_max_states}")
    p = np.zeros(N)
    for g in window.values:
        p[g % N] += 1.0
    p /= window.n
    return Distribution(N=N, probs=p)


def _convolve_once(probs: np.ndarray, step: Distribution) -> np.ndarray:
    """One cyclic convolution with the step law, in the time domain.

    The step law has at most n + 1 nonzero entries, so a shift-and-add
    over its support is O(N * n) and free of FFT rounding.
    """
    out = np.zeros_like(probs)
    for x in np.flatnonzero(step.probs):
        out += step.probs[x] * np.roll(probs, x)
    return out


def _powers_clamped(lam: np.ndarray, t: int) -> np.ndarray:
    """lam**t by repeated squaring, clamping moduli at 1 after each multiply.

    Without the clamp, rounding can push |lam^t| above 1 and the drift
    compounds over large t.
    """

    def _clamp(z: np.ndarray) -> np.ndarray:
        m = np.abs(z)
        over = m > 1.0
        if np.any(over):
            z = z.copy()
            z[over] /= m[over]
        return z

    result = np.ones_like(lam)
    base = _clamp(lam.astype(np.complex128))
    e = t
    while e:
        if e & 1:
            result = _clamp(result * base)
        base = _clamp(base * base)
        e >>= 1
    return result


def evolve(step: Distribution, t: int, method: str = "auto") -> Distribution:
    """t-fold self-convolution of the step law applied to the point mass at 0.

    method "spectral" (the default route) powers the DFT coefficients
    and inverts; "direct" repeats time-domain convolution and serves as
    the independent oracle for the spectral path.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    N = step.N
    if t == 0:
        return point_mass(N)
    if method == "auto":
        method = "spectral"
    if method == "direct":
        probs = point_mass(N).probs
        for _ in range(t):
            probs = _convolve_once(probs, step)
        return Distribution(N=N, probs=probs)
    if method == "spectral":
        lam = N * np.fft.ifft(step.probs)  # lam[m] = eigenvalue at k = m mod N
        lam[0] = 1.0  # step law is stochastic by construction
        powered = _powers_clamped(lam, t)
        probs = np.fft.fft(powered).real / N
        return Distribution(N=N, probs=probs)
    raise ValueError(f"unknown method {method!r}")


def tv_to_uniform(dist: Distribution) -> float:
    """(1/2) sum_x |probs[x] - 1/N|."""
    return 0.5 * float(np.abs(dist.probs - 1.0 / dist.N).sum())


def mixing_time(
    window: SequenceWindow,
    epsilon: float,
    n_max_states: int = DEFAULT_N_MAX,
) -> MixingResult:
    """Smallest t with TV(P^t, uniform) <= epsilon, by forward scan from 0.

    The scan advances one convolution per step in the time domain: the
    incremental cost matches the spectral route and keeps exact rational
    ties (which do occur at small N) independent of FFT rounding.
    """
    if not 0.0 < float(epsilon) < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    eps = float(epsilon)
    step = step_distribution(window, n_max_states=n_max_states)
    probs = point_mass(step.N).probs
    curve: list[tuple[int, float]] = []
    for t in range(_SCAN_CAP + 1):
        tv = tv_to_uniform(Distribution(N=step.N, probs=probs))
        curve.append((t, tv))
        if tv <= eps:
            return MixingResult(
                n=window.n,
                N=step.N,
                epsilon=eps,
                t_mix=t,
                tv_curve=tuple(curve),
            )
        probs = _convolve_once(probs, step)
    raise NoMixing(f"TV never reached {eps} within {_SCAN_CAP} steps")
