"""Random walks on Z_{G_n} with linear-recurrence step sets.

Exact circulant spectra, total-variation mixing times, closed-form
bound evaluation, inequality verification suites, and seeded simulation.
"""

__version__ = "0.1.0"

from .errors import (
    RecwalkError,
    NonIncreasingSequence,
    NonPositiveTerm,
    NoPositiveCoefficient,
    WindowTooShort,
    StateSpaceTooLarge,
    DegenerateStateSpace,
    NotFirstOrder,
    DomainError,
    UnknownSuite,
    NoMixing,
)
from .recurrence import (
    PRESETS,
    GrowthEstimate,
    RecurrenceSpec,
    SequenceWindow,
    estimate_growth,
    generate,
    s_value,
)
from .spectrum import (
    DEFAULT_N_MAX,
    Spectrum,
    UnnormalizedEigenvalue,
    compute_spectrum,
    lift_eigenvalue,
    slem,
    slem_streaming,
    unnormalized_eigenvalue,
    unnormalized_moduli,
    unnormalized_values,
)
from .walk import (
    Distribution,
    MixingResult,
    evolve,
    mixing_time,
    point_mass,
    step_distribution,
    tv_to_uniform,
    uniform,
)
from .bounds import (
    BoundReport,
    build_report,
    first_order_base,
    gamma_first_order,
    gamma_general,
    kappa_first_order,
    kappa_general,
    lower_first_order,
    lower_general,
    m_of_n,
    relaxation_lower,
    seq2bound_multiset,
    ubl_implied_t,
    upper_first_order,
    upper_general,
)
from .montecarlo import SimConfig, simulate_tv
from .verify import SUITE_NAMES, SuiteResult, run_suites

__all__ = [name for name in dir() if not name.startswith("_")]
