"""Eigenvalues of the walk's circulant transition matrix.

For the walk on Z_N with step set {G_1..G_n}, N = G_n, the transition
matrix is circulant and its eigenvalues are

    lambda_k = (1/n) * sum_i xi_N^(k*G_i),   xi_N = exp(2*pi*i/N),

indexed k = 1..N with lambda_N = 1.  Exponents k*G_i are reduced mod N
in exact integer arithmetic before any float conversion; naive floating
angles lose all precision once k*G_i approaches 2^53.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DegenerateStateSpace, DomainError, NotFirstOrder, StateSpaceTooLarge
from .recurrence import SequenceWindow

# Dense full-spectrum storage cap (entries). Larger N must stream.
DEFAULT_N_MAX = 2**24

# (N-1)^2 must stay below 2^63 for the vectorized int64 reduction.
_INT64_SAFE_N = 3_037_000_499

_CHUNK = 1 << 18


@dataclass(frozen=True)
class Spectrum:
    """All N eigenvalues of one walk, 1-based by k, plus the SLEM."""

    n: int
    modulus: int
    eigenvalues: np.ndarray  # index k-1 holds lambda_k
    slem: float

    def eigenvalue(self, k: int) -> complex:
        if not 1 <= k <= self.modulus:
            raise DomainError(f"k must be in 1..{self.modulus}, got {k}")
        return complex(self.eigenvalues[k - 1])


@dataclass(frozen=True)
class UnnormalizedEigenvalue:
    """lambda-tilde_{n,k} = n * lambda_{n,k} for the sequence c^(n-1)."""

    n: int
    k: int
    value: complex


def _eigenvalue_block(ks: np.ndarray, steps: list[int], N: int) -> np.ndarray:
    """lambda_k for one block of k values; fixed summation order over i."""
    acc = np.zeros(len(ks), dtype=np.complex128)
    for g in steps:
        r = (ks * g) % N
        acc += np.exp((2j * np.pi / N) * r)
    return acc / len(steps)


def iter_eigenvalue_chunks(
    window: SequenceWindow, chunk: int = _CHUNK
) -> Iterator[np.ndarray]:
    """Yield the nontrivial eigenvalues lambda_1..lambda_{N-1} in k order.

    Storage-free except for one chunk at a time, so it works beyond the
    dense cap; SLEM and one-pass bound sums are built on this.
    """
    N = window.modulus
    if N > _INT64_SAFE_N:
        raise StateSpaceTooLarge(
            f"N = {N} exceeds the exact int64 reduction range"
        )
    steps = [g % N for g in window.values]
    for lo in range(1, N, chunk):
        hi = min(lo + chunk, N)
        ks = np.arange(lo, hi, dtype=np.int64)
        yield _eigenvalue_block(ks, steps, N)


def compute_spectrum(
    window: SequenceWindow, n_max_states: int = DEFAULT_N_MAX
) -> Spectrum:
    """Materialize the full spectrum for N = G_n <= n_max_states."""
    N = window.modulus
    if N > n_max_states:
        raise StateSpaceTooLarge(f"N = {N} exceeds the dense cap {n_max_states}")
    eig = np.ones(N, dtype=np.complex128)  # slot N-1 is lambda_N = 1 exactly
    worst = 0.0
    pos = 0
    for block in iter_eigenvalue_chunks(window):
        eig[pos : pos + len(block)] = block
        m = float(np.max(np.abs(block)))
        if m > worst:
            worst = m
        pos += len(block)
    return Spectrum(n=window.n, modulus=N, eigenvalues=eig, slem=worst)


def slem(spectrum: Spectrum) -> float:
    """Second largest eigenvalue modulus, max over k != N of |lambda_k|."""
    if spectrum.modulus < 2:
        raise DegenerateStateSpace("N = 1 has no nontrivial eigenvalue")
    return spectrum.slem


def slem_streaming(window: SequenceWindow, chunk: int = _CHUNK) -> float:
    """SLEM in one pass without storing the spectrum (any N)."""
    if window.modulus < 2:
        raise DegenerateStateSpace("N = 1 has no nontrivial eigenvalue")
    worst = 0.0
    for block in iter_eigenvalue_chunks(window, chunk):
        m = float(np.max(np.abs(block)))
        if m > worst:
            worst = m
    return worst


def unnormalized_eigenvalue(c: int, n: int, k: int) -> complex:
    """lambda-tilde_{n,k} for the first-order sequence G_i = c^(i-1).

    Equals sum over m = 0..n-1 of exp(2*pi*i * (k mod c^m) / c^m); the
    m = 0 term is always 1.
    """
    if c < 2 or int(c) != c:
        raise NotFirstOrder(f"base must be an integer >= 2, got {c}")
    if n < 1:
        raise DomainError("n must be at least 1")
    if not 1 <= k <= c**(n - 1):
        raise DomainError(f"k must be in 1..c^(n-1) = {c**(n-1)}, got {k}")
    total = 0j
    for m in range(n):
        q = c**m
        total += np.exp(2j * np.pi * (k % q) / q)
    return complex(total)


def unnormalized_values(c: int, n: int) -> np.ndarray:
    """lambda-tilde_{n,k} for all k = 1..c^(n-1), vectorized over k."""
    if c < 2:
        raise NotFirstOrder(f"base must be an integer >= 2, got {c}")
    N = c**(n - 1)
    if N > _INT64_SAFE_N:
        raise StateSpaceTooLarge(f"c^(n-1) = {N} too large for dense evaluation")
    ks = np.arange(1, N + 1, dtype=np.int64)
    acc = np.zeros(N, dtype=np.complex128)
    for m in range(n):
        q = c**m
        acc += np.exp((2j * np.pi / q) * (ks % q))
    return acc


def unnormalized_moduli(c: int, n: int) -> np.ndarray:
    """|lambda-tilde_{n,k}| for all k = 1..c^(n-1)."""
    return np.abs(unnormalized_values(c, n))


def lift_eigenvalue(c: int, n: int, k: int) -> list[UnnormalizedEigenvalue]:
    """The c level-(n+1) descendants of lambda-tilde_{n,k}.

    Returns the pairs (k + j*c^(n-1), lambda-tilde_{n+1, k + j*c^(n-1)})
    for j = 0..c-1, evaluated directly at level n+1.  Each equals
    lambda-tilde_{n,k} + xi_{c^n}^(k + j*c^(n-1)); the verification
    suite checks that identity numerically.
    """
    if c < 2 or int(c) != c:
        raise NotFirstOrder(f"base must be an integer >= 2, got {c}")
    if n < 1:
        raise DomainError("n must be at least 1")
    base = c**(n - 1)
    if not 1 <= k <= base:
        raise DomainError(f"k must be in 1..c^(n-1) = {base}, got {k}")
    out = []
    for j in range(c):
        idx = k + j * base
        out.append(
            UnnormalizedEigenvalue(
                n=n + 1, k=idx, value=unnormalized_eigenvalue(c, n + 1, idx)
            )
        )
    return out
