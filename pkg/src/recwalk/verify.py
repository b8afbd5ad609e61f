"""Numerical verification suites for the inequalities the bounds rest on.

Each suite sweeps a family of instances and reports the worst case:
either the smallest margin left under an inequality ("min_margin",
negative means violated beyond tolerance) or the largest residual of an
identity ("max_error").  Exit-code policy lives in the CLI; here a
suite just says passed or not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .errors import DomainError, UnknownSuite
from .recurrence import PRESETS, RecurrenceSpec, generate, s_value
from .spectrum import (
    DEFAULT_N_MAX,
    compute_spectrum,
    iter_eigenvalue_chunks,
    unnormalized_values,
)
from .bounds import seq2bound_multiset
from . import walk

SUITE_NAMES = (
    "eigmod-bound",
    "angle-cover",
    "lifting",
    "multiset-domination",
    "ubl-consistency",
)

EIGMOD_TOL = 1e-12
LIFT_TOL = 1e-9
DOMINATION_TOL = 1e-9
UBL_TOL = 1e-9


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    passed: bool
    metric: str  # "min_margin" or "max_error"
    worst_slack: float
    cases: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def _preset_windows(specs: dict[str, RecurrenceSpec], n_min: int, n_max: int):
    for name, spec in specs.items():
        for n in range(n_min, n_max + 1):
            yield name, generate(spec, n)


def eigmod_bound_suite(
    specs: dict[str, RecurrenceSpec],
    n_min: int = 2,
    n_max: int = 8,
    n_max_states: int = DEFAULT_N_MAX,
) -> SuiteResult:
    """|lambda_k| <= 1 - (2/n)(1 - |cos(pi/(s+1))|) for every nontrivial k."""
    if n_min < 2:
        raise DomainError("eigmod-bound requires n >= 2")
    cases = []
    worst = math.inf
    for name, window in _preset_windows(specs, n_min, n_max):
        s = s_value(window.spec)
        bound = 1.0 - (2.0 / window.n) * (1.0 - abs(math.cos(math.pi / (s + 1))))
        top = 0.0
        for block in iter_eigenvalue_chunks(window):
            top = max(top, float(np.max(np.abs(block))))
        slack = bound - top
        worst = min(worst, slack)
        cases.append(
            {"sequence": name, "n": window.n, "slack": slack, "bound": bound}
        )
    passed = worst >= -EIGMOD_TOL
    return SuiteResult("eigmod-bound", passed, "min_margin", worst, cases)


def angle_cover_suite(
    specs: dict[str, RecurrenceSpec],
    n_min: int = 2,
    n_max: int = 8,
    n_max_states: int = DEFAULT_N_MAX,
) -> SuiteResult:
    """Every k in 1..N-1 has some j < n with frac(k G_j / N) in the
    closed interval [1/(s+1), s/(s+1)].

    Containment is decided in exact integers: N <= (s+1) r <= s N with
    r = (k G_j) mod N; the reported margin is the float fraction.
    """
    if n_min < 2:
        raise DomainError("angle-cover requires n >= 2")
    cases = []
    worst = math.inf
    chunk = 1 << 18
    for name, window in _preset_windows(specs, n_min, n_max):
        N = window.modulus
        s = s_value(window.spec)
        lo_frac, hi_frac = 1.0 / (s + 1), s / (s + 1)
        gs = [g % N for g in window.values[:-1]]  # j = 1..n-1
        miss = 0
        margin = math.inf
        for klo in range(1, N, chunk):
            ks = np.arange(klo, min(klo + chunk, N), dtype=np.int64)
            covered = np.zeros(len(ks), dtype=bool)
            best = np.full(len(ks), -math.inf)
            for g in gs:
                r = (ks * g) % N
                covered |= (N <= (s + 1) * r) & ((s + 1) * r <= s * N)
                frac = r / N
                best = np.maximum(best, np.minimum(frac - lo_frac, hi_frac - frac))
            miss += int(np.count_nonzero(~covered))
            margin = min(margin, float(best.min()))
        worst = min(worst, margin)
        cases.append(
            {"sequence": name, "n": window.n, "uncovered": miss, "margin": margin}
        )
    passed = all(c["uncovered"] == 0 for c in cases)
    return SuiteResult("angle-cover", passed, "min_margin", worst, cases)


def lifting_suite(bases: tuple[int, ...] = (2, 3), cap: int = 10**5) -> SuiteResult:
    """Residual of the lifting identity
    lam~_{n+1, k + j c^(n-1)} = lam~_{n,k} + xi_{c^n}^(k + j c^(n-1))
    over all (c, n, k, j) with c^n <= cap."""
    cases = []
    worst = 0.0
    for c in bases:
        n = 1
        while c**n <= cap:
            base = c ** (n - 1)
            parents = np.concatenate(([1.0 + 0j], unnormalized_values(c, n)))
            children = unnormalized_values(c, n + 1)  # k = 1..c^n
            idx = np.arange(1, c**n + 1, dtype=np.int64)
            k_parent = ((idx - 1) % base) + 1 if n > 1 else np.ones_like(idx)
            predicted = parents[k_parent] + np.exp(2j * np.pi * idx / (c**n))
            err = float(np.max(np.abs(children - predicted)))
            worst = max(worst, err)
            cases.append({"c": c, "n": n, "max_error": err})
            n += 1
    passed = worst < LIFT_TOL
    return SuiteResult("lifting", passed, "max_error", worst, cases)


def multiset_domination_suite(
    bases: tuple[int, ...] = (2, 3, 4), cap: int = 10**5
) -> SuiteResult:
    """Sorted |lam~_{n,k}| dominated pairwise by the sorted bound multiset
    with multiplicities C(n-1, m)(c-1)^m; totals must equal c^(n-1)."""
    cases = []
    worst = math.inf
    for c in bases:
        n = 2
        while c ** (n - 1) <= cap:
            mods = np.sort(np.abs(unnormalized_values(c, n)))[::-1]
            pairs = seq2bound_multiset(c, n)
            total = sum(mult for _, mult in pairs)
            expanded = np.repeat(
                [val for val, _ in pairs], [mult for _, mult in pairs]
            )
            expanded = np.sort(expanded)[::-1]
            ok_total = total == c ** (n - 1) and len(expanded) == len(mods)
            margin = float(np.min(expanded - mods)) if ok_total else -math.inf
            worst = min(worst, margin)
            cases.append(
                {
                    "c": c,
                    "n": n,
                    "margin": margin,
                    "multiplicity_total_ok": ok_total,
                }
            )
            n += 1
    passed = worst >= -DOMINATION_TOL
    return SuiteResult("multiset-domination", passed, "min_margin", worst, cases)


def ubl_consistency_suite(
    specs: dict[str, RecurrenceSpec],
    n_min: int = 2,
    n_max: int = 8,
    epsilon: float = 0.25,
    n_max_states: int = DEFAULT_N_MAX,
) -> SuiteResult:
    """TV(t)^2 <= (1/4) sum_{k<N} |lambda_k|^(2t) at every scanned t."""
    if n_min < 2:
        raise DomainError("ubl-consistency requires n >= 2")
    cases = []
    worst = math.inf
    for name, window in _preset_windows(specs, n_min, n_max):
        spectrum = compute_spectrum(window, n_max_states=n_max_states)
        sq = np.abs(spectrum.eigenvalues[:-1]) ** 2
        result = walk.mixing_time(window, epsilon, n_max_states=n_max_states)
        powered = np.ones_like(sq)
        margin = math.inf
        for t, tv in result.tv_curve:
            rhs = 0.25 * float(powered.sum())
            margin = min(margin, rhs - tv * tv)
            powered *= sq
        worst = min(worst, margin)
        cases.append({"sequence": name, "n": window.n, "margin": margin})
    passed = worst >= -UBL_TOL
    return SuiteResult("ubl-consistency", passed, "min_margin", worst, cases)


def run_suites(
    suite: str,
    specs: dict[str, RecurrenceSpec] | None = None,
    n_min: int = 2,
    n_max: int = 8,
    epsilon: float = 0.25,
    n_max_states: int = DEFAULT_N_MAX,
    lift_bases: tuple[int, ...] = (2, 3),
    domination_bases: tuple[int, ...] = (2, 3, 4),
    cap: int = 10**5,
) -> list[SuiteResult]:
    """Run one named suite, or all of them."""
    if specs is None:
        specs = dict(PRESETS)
    runners = {
        "eigmod-bound": lambda: eigmod_bound_suite(specs, n_min, n_max, n_max_states),
        "angle-cover": lambda: angle_cover_suite(specs, n_min, n_max, n_max_states),
        "lifting": lambda: lifting_suite(lift_bases, cap),
        "multiset-domination": lambda: multiset_domination_suite(
            domination_bases, cap
        ),
        "ubl-consistency": lambda: ubl_consistency_suite(
            specs, n_min, n_max, epsilon, n_max_states
        ),
    }
    if suite == "all":
        return [runners[name]() for name in SUITE_NAMES]
    if suite not in runners:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {SUITE_NAMES + ('all',)}")
    return [runners[suite]()]
