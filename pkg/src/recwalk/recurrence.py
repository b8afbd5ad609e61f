"""Linear-recurrence integer sequences and their scalar parameters.

A sequence spec is the pair (coefficients, initial terms) of

    G_i = a_1 G_{i-1} + a_2 G_{i-2} + ... + a_d G_{i-d},   G_1 = 1,

generated in exact integer arithmetic.  The window G_1..G_n doubles as
the step set of the walk on Z_{G_n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonIncreasingSequence,
    NonPositiveTerm,
    NoPositiveCoefficient,
    WindowTooShort,
)

# Trailing-ratio threshold separating exponential from polynomial growth.
GROWTH_DELTA = 1e-6


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficients a_1..a_d and the d initial terms G_1..G_d."""

    coeffs: tuple[int, ...]
    init: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        object.__setattr__(self, "init", tuple(int(g) for g in self.init))
        if len(self.coeffs) < 1:
            raise ValueError("recurrence order must be at least 1")
        if len(self.init) != len(self.coeffs):
            raise ValueError("need exactly one initial term per coefficient")
        if self.init[0] != 1:
            raise ValueError("G_1 must be 1")
        if any(g <= 0 for g in self.init):
            raise NonPositiveTerm(f"initial terms must be positive: {self.init}")

    @property
    def order(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class SequenceWindow:
    """The exact terms G_1..G_n of one sequence, strictly increasing."""

    spec: RecurrenceSpec
    n: int
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        """State-space size N = G_n."""
        return self.values[-1]


@dataclass(frozen=True)
class GrowthEstimate:
    """Numerical growth summary of a window.

    dominant_rate is the last available ratio G_n/G_{n-1}; the
    exponential/polynomial call is made on an extrapolated limit of the
    ratio sequence, and eta1_lower is a usable lower growth base.
    """

    dominant_rate: float
    is_exponential: bool
    eta1_lower: float | None


PRESETS: dict[str, RecurrenceSpec] = {
    "pow2": RecurrenceSpec((2,), (1,)),
    "pow3": RecurrenceSpec((3,), (1,)),
    "fib-odd": RecurrenceSpec((3, -1), (1, 3)),
}


def generate(spec: RecurrenceSpec, n: int) -> SequenceWindow:
    """Generate G_1..G_n exactly.

    Raises NonPositiveTerm or NonIncreasingSequence when the spec
    leaves the positive increasing regime within the window; both mean
    the walk's standing hypotheses do not hold for this spec.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    d = spec.order
    vals = list(spec.init[:n])
    while len(vals) < n:
        nxt = sum(spec.coeffs[j] * vals[-1 - j] for j in range(d))
        vals.append(nxt)
    for i, g in enumerate(vals):
        if g <= 0:
            raise NonPositiveTerm(f"G_{i + 1} = {g} is not positive")
    for i in range(1, n):
        if vals[i] <= vals[i - 1]:
            raise NonIncreasingSequence(
                f"G_{i + 1} = {vals[i]} does not exceed G_{i} = {vals[i - 1]}"
            )
    return SequenceWindow(spec=spec, n=n, values=tuple(vals))


def s_value(spec: RecurrenceSpec) -> int:
    """Sum of the positive recurrence coefficients."""
    s = sum(a for a in spec.coeffs if a > 0)
    if s <= 0:
        raise NoPositiveCoefficient(f"no positive coefficient in {spec.coeffs}")
    return s


def estimate_growth(
    window: SequenceWindow, eta1_override: float | None = None
) -> GrowthEstimate:
    """Estimate the limiting ratio G_{i+1}/G_i from a window.

    The reported dominant_rate is the raw trailing ratio.  For the
    exponential/polynomial decision that ratio is misleading at small n
    (polynomial families still have ratio > 1), so the classifier uses a
    two-point extrapolation of r_i = G_{i+1}/G_i: with r_i = L + c/i the
    limit is L = i*r_i - (i-1)*r_{i-1}, exact for both geometric ratios
    (constant r) and polynomial families (r_i = 1 + O(1/i)).

    eta1_lower is the caller's override when given, otherwise the
    minimum ratio over the trailing half of the window.
    """
    if window.n < 3:
        raise WindowTooShort("growth estimation needs at least 3 terms")
    v = window.values
    ratios = [Fraction(v[i + 1], v[i]) for i in range(window.n - 1)]
    dominant = float(ratios[-1])

    i = len(ratios)  # 1-based position of the last ratio
    extrapolated = float(i * ratios[-1] - (i - 1) * ratios[-2])
    exponential = extrapolated >= 1.0 + GROWTH_DELTA

    if eta1_override is not None:
        eta1 = float(eta1_override)
    else:
        tail = ratios[len(ratios) // 2 :]
        eta1 = float(min(tail))
    return GrowthEstimate(
        dominant_rate=dominant, is_exponential=exponential, eta1_lower=eta1
    )
