"""Closed-form mixing-time bounds and the quantities in their proofs.

All logarithms are natural: the underlying estimates run through
exp(-x) comparisons, so e is the only base that keeps the stated
constants exact.  Real-valued bounds are returned as reals; integer
comparisons against exact mixing times use ceil/floor at the call site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np

from .errors import DegenerateStateSpace, DomainError
from .recurrence import RecurrenceSpec, SequenceWindow, estimate_growth, s_value
from .spectrum import DEFAULT_N_MAX, Spectrum, compute_spectrum, slem_streaming
from . import walk

_ETA1_MIN = 1.0 + 1e-9


@dataclass(frozen=True)
class BoundReport:
    """Every applicable bound for one (sequence, n, epsilon) triple."""

    sequence_id: str
    n: int
    N: int
    epsilon: float
    s: int
    kappa_general: float
    upper_general: float
    lower_general: float | None
    c: int | None
    kappa_first_order: float | None
    upper_first_order: float | None
    gamma_first_order: float | None
    lower_first_order: float | None
    relaxation_lower: float
    ubl_implied_t: int | None
    exact_t_mix: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def kappa_general(s: int) -> float:
    """kappa = 1/(4 - 4 cos(pi/(s+1)))."""
    if s < 1:
        raise DomainError(f"s must be at least 1, got {s}")
    return 1.0 / (4.0 - 4.0 * math.cos(math.pi / (s + 1)))


def upper_general(n: int, G_n: int, s: int, epsilon: float) -> float:
    """General upper bound kappa*n*log(G_n - 1) - kappa*n*log(4*eps^2)."""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if G_n < 2:
        raise DomainError(f"G_n must be at least 2, got {G_n}")
    if not 0.0 < epsilon < 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2), got {epsilon}")
    k = kappa_general(s)
    # math.log takes the exact integer, so G_n far beyond float range is fine
    return k * n * math.log(G_n - 1) - k * n * math.log(4.0 * epsilon * epsilon)


def gamma_general(eta1_lower: float) -> float:
    """gamma = 2/log(eta_1) + pi^2/log(2) for the exponential lower bound."""
    if eta1_lower < _ETA1_MIN:
        raise DomainError(f"eta_1 must exceed 1 + 1e-9, got {eta1_lower}")
    return 2.0 / math.log(eta1_lower) + math.pi**2 / math.log(2.0)


def lower_general(n: int, gamma: float, epsilon: float) -> float:
    """Exponential-growth lower bound ((n - g*ln n)/(g*ln n)) * ln(1/(2 eps)).

    May be negative at small n; it is then a valid but vacuous bound.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if gamma <= 0.0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    if not 0.0 < epsilon <= 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2], got {epsilon}")
    g = gamma * math.log(n)
    return (n - g) / g * math.log(1.0 / (2.0 * epsilon))


def m_of_n(window: SequenceWindow) -> int:
    """Largest j with G_{n-j}/G_n > 1/n (0 if none), decided in exact ints."""
    if window.n < 2:
        raise DomainError(f"n must be at least 2, got {window.n}")
    v = window.values
    n, N = window.n, window.modulus
    best = 0
    for j in range(1, n):
        if n * v[n - j - 1] > N:
            best = j
    return best


def kappa_first_order(c: int) -> float:
    """kappa = 1/(1 - cos(pi/c)) for the sequence c^(n-1)."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    return 1.0 / (1.0 - math.cos(math.pi / c))


def upper_first_order(c: int, n: int, epsilon: float) -> float:
    """First-order upper bound k*n*log((n-1)(c-1)) - k*n*log(log(4 eps^2 + 1))."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if not 0.0 < epsilon < 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2), got {epsilon}")
    k = kappa_first_order(c)
    inner = math.log(4.0 * epsilon * epsilon + 1.0)
    return k * n * math.log((n - 1) * (c - 1)) - k * n * math.log(inner)


def gamma_first_order(c: int) -> float:
    """gamma = 1/(1 - cos(2 pi/c)); infinite at c = 2, hence an error there."""
    if c < 3:
        raise DomainError(f"c = {c} is at or past the cos(2 pi/c) = 1 pole; need c >= 3")
    return 1.0 / (1.0 - math.cos(2.0 * math.pi / c))


def lower_first_order(c: int, n: int, epsilon: float) -> float:
    """First-order lower bound (gamma*n - 1) * log(1/(2 eps)), c >= 3."""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if not 0.0 < epsilon <= 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2], got {epsilon}")
    g = gamma_first_order(c)
    return (g * n - 1.0) * math.log(1.0 / (2.0 * epsilon))


def relaxation_lower(slem: float, epsilon: float) -> float:
    """Relaxation-time lower bound (1/(1 - slem) - 1) * log(1/(2 eps))."""
    if not 0.0 <= slem < 1.0:
        raise DomainError(f"slem must be in [0, 1), got {slem}")
    if not 0.0 < epsilon < 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2), got {epsilon}")
    return (1.0 / (1.0 - slem) - 1.0) * math.log(1.0 / (2.0 * epsilon))


def ubl_implied_t(spectrum: Spectrum, epsilon: float) -> int:
    """Smallest t with (1/4) sum_{k<N} |lambda_k|^(2t) <= epsilon^2.

    Scans forward; the sum is strictly decreasing in t whenever slem < 1.
    """
    if spectrum.modulus < 2:
        raise DegenerateStateSpace("N = 1 has no nontrivial eigenvalue")
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must be in (0, 1), got {epsilon}")
    if spectrum.slem >= 1.0:
        raise DomainError("slem >= 1: the scan would not terminate")
    target = float(epsilon) ** 2
    sq = np.abs(spectrum.eigenvalues[:-1]) ** 2
    powered = np.ones_like(sq)
    t = 0
    while True:
        if 0.25 * float(powered.sum()) <= target:
            return t
        powered *= sq
        t += 1


def seq2bound_multiset(c: int, n: int) -> list[tuple[float, int]]:
    """Dominating multiset for |lambda-tilde_{n,k}| on the sequence c^(n-1).

    Pairs (n + (m/2)(cos(pi/c) - 1), C(n-1, m) (c-1)^m) for m = 0..n-1;
    the multiplicities total c^(n-1).
    """
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    shrink = math.cos(math.pi / c) - 1.0
    return [
        (n + 0.5 * m * shrink, math.comb(n - 1, m) * (c - 1) ** m)
        for m in range(n)
    ]


def first_order_base(spec: RecurrenceSpec) -> int | None:
    """c when the spec is G_i = c^(i-1) (order 1, coefficient >= 2), else None."""
    if spec.order == 1 and spec.coeffs[0] >= 2:
        return spec.coeffs[0]
    return None


def build_report(
    sequence_id: str,
    window: SequenceWindow,
    epsilon: float,
    eta1_override: float | None = None,
    n_max_states: int = DEFAULT_N_MAX,
    include_exact: bool = True,
) -> BoundReport:
    """Evaluate every applicable bound for one window.

    First-order bounds appear only for pow-c specs.  The general lower
    bound needs an eta_1; without an override it uses the window
    estimate and is omitted for sequences classified as non-exponential
    or windows too short to classify.
    """
    n, N = window.n, window.modulus
    if n < 2:
        raise DomainError("bound reports need n >= 2")
    eps = float(epsilon)
    s = s_value(window.spec)

    eta1 = eta1_override
    if eta1 is None and n >= 3:
        growth = estimate_growth(window)
        if growth.is_exponential:
            eta1 = growth.eta1_lower
    lower_gen = None
    if eta1 is not None:
        lower_gen = lower_general(n, gamma_general(eta1), eps)

    c = first_order_base(window.spec)
    kappa_fo = upper_fo = gamma_fo = lower_fo = None
    if c is not None:
        kappa_fo = kappa_first_order(c)
        upper_fo = upper_first_order(c, n, eps)
        if c >= 3:
            gamma_fo = gamma_first_order(c)
            lower_fo = lower_first_order(c, n, eps)

    ubl_t: int | None = None
    exact: int | None = None
    if N <= n_max_states:
        spectrum = compute_spectrum(window, n_max_states=n_max_states)
        lam_star = spectrum.slem
        ubl_t = ubl_implied_t(spectrum, eps)
        if include_exact:
            exact = walk.mixing_time(window, eps, n_max_states=n_max_states).t_mix
    else:
        lam_star = slem_streaming(window)

    return BoundReport(
        sequence_id=sequence_id,
        n=n,
        N=N,
        epsilon=eps,
        s=s,
        kappa_general=kappa_general(s),
        upper_general=upper_general(n, N, s, eps),
        lower_general=lower_gen,
        c=c,
        kappa_first_order=kappa_fo,
        upper_first_order=upper_fo,
        gamma_first_order=gamma_fo,
        lower_first_order=lower_fo,
        relaxation_lower=relaxation_lower(lam_star, eps),
        ubl_implied_t=ubl_t,
        exact_t_mix=exact,
    )
