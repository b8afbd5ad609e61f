import numpy as np
import pytest

from recwalk import (
    DegenerateStateSpace,
    DomainError,
    NotFirstOrder,
    PRESETS,
    StateSpaceTooLarge,
    compute_spectrum,
    generate,
    lift_eigenvalue,
    slem,
    slem_streaming,
    step_distribution,
    unnormalized_eigenvalue,
    unnormalized_moduli,
    unnormalized_values,
)

from expected_values import SLEMS


def spectrum_for(name, n):
    return compute_spectrum(generate(PRESETS[name], n))


def test_trivial_eigenvalue_is_exactly_one():
    for name in PRESETS:
        for n in range(1, 7):
            spec = spectrum_for(name, n)
            assert spec.eigenvalue(spec.modulus) == 1.0 + 0.0j


def test_pow2_n2_spectrum():
    # steps {1, 2} on Z_2: lambda_1 = (xi_2 + 1)/2 = 0
    spec = spectrum_for("pow2", 2)
    assert abs(spec.eigenvalue(1)) < 1e-15
    assert spec.slem < 1e-15


def test_pow3_n2_spectrum():
    # steps {1, 3} on Z_3: |lambda_1| = |lambda_2| = 1/2
    spec = spectrum_for("pow3", 2)
    assert abs(spec.eigenvalue(1)) == pytest.approx(0.5, abs=1e-12)
    assert abs(spec.eigenvalue(2)) == pytest.approx(0.5, abs=1e-12)


def test_conjugate_symmetry():
    # real transition matrix: lambda_{N-k} is the conjugate of lambda_k
    for name in PRESETS:
        spec = spectrum_for(name, 6)
        eig = spec.eigenvalues
        N = spec.modulus
        for k in range(1, N):
            assert eig[N - k - 1] == pytest.approx(np.conj(eig[k - 1]), abs=1e-12)


def test_moduli_bounded_by_one():
    for name in PRESETS:
        spec = spectrum_for(name, 8)
        assert float(np.max(np.abs(spec.eigenvalues))) <= 1.0 + 1e-12


def test_slem_matches_frozen_values():
    for name, expected in SLEMS.items():
        for i, want in enumerate(expected):
            spec = spectrum_for(name, i + 2)
            assert slem(spec) == pytest.approx(want, abs=1e-12), (name, i + 2)


def test_pow2_slem_closed_form():
    # k = N/2 maps every step but G_1 to +1, giving |(n-2)/n| exactly
    for n in range(3, 10):
        spec = spectrum_for("pow2", n)
        assert slem(spec) == pytest.approx((n - 2) / n, abs=1e-12)


def test_slem_requires_nontrivial_state_space():
    spec = spectrum_for("pow2", 1)
    with pytest.raises(DegenerateStateSpace):
        slem(spec)
    with pytest.raises(DegenerateStateSpace):
        slem_streaming(generate(PRESETS["pow2"], 1))


def test_streaming_slem_agrees_with_dense():
    for name in PRESETS:
        window = generate(PRESETS[name], 7)
        dense = slem(compute_spectrum(window))
        assert slem_streaming(window, chunk=64) == pytest.approx(dense, abs=1e-14)


def test_dense_cap_enforced():
    window = generate(PRESETS["pow2"], 12)
    with pytest.raises(StateSpaceTooLarge):
        compute_spectrum(window, n_max_states=1024)


def test_eigenvalue_accessor_range():
    spec = spectrum_for("pow3", 3)
    with pytest.raises(DomainError):
        spec.eigenvalue(0)
    with pytest.raises(DomainError):
        spec.eigenvalue(10)


def test_against_naive_angle_oracle():
    """Cross-check the exact-reduction path against naive float angles.

    Valid only while k*G_i stays well below 2^53, which holds for every
    preset window with N <= 10^4.
    """
    for name, n in [("pow2", 9), ("pow3", 7), ("fib-odd", 9)]:
        window = generate(PRESETS[name], n)
        N = window.modulus
        spec = compute_spectrum(window)
        ks = np.arange(1, N + 1, dtype=np.float64)
        naive = np.zeros(N, dtype=np.complex128)
        for g in window.values:
            naive += np.exp(2j * np.pi * ks * g / N)
        naive /= window.n
        assert float(np.max(np.abs(spec.eigenvalues - naive))) < 1e-9


def test_against_dft_of_step_distribution():
    # lambda_k must equal the DFT of the step distribution at -k
    for name in PRESETS:
        window = generate(PRESETS[name], 6)
        N = window.modulus
        spec = compute_spectrum(window)
        lam = N * np.fft.ifft(step_distribution(window).probs)
        for k in range(1, N + 1):
            assert spec.eigenvalue(k) == pytest.approx(lam[k % N], abs=1e-9)


def test_unnormalized_scalar_values():
    # c=2: tilde(1,1) = 1, tilde(2,2) = 2, tilde(3,2) = 1 + xi_4^2 + 1 = 1
    assert unnormalized_eigenvalue(2, 1, 1) == pytest.approx(1.0, abs=1e-12)
    assert unnormalized_eigenvalue(2, 2, 2) == pytest.approx(2.0, abs=1e-12)
    assert unnormalized_eigenvalue(2, 3, 2) == pytest.approx(1.0, abs=1e-12)


def test_unnormalized_matches_scaled_spectrum():
    # tilde lambda_{n,k} = n * lambda_k for the pow-c walk, same k order
    for c, n in [(2, 5), (3, 4)]:
        name = f"pow{c}"
        window = generate(PRESETS[name], n)
        spec = compute_spectrum(window)
        tilde = unnormalized_values(c, n)
        assert np.max(np.abs(tilde - n * spec.eigenvalues)) < 1e-9


def test_unnormalized_moduli_bounded_by_n():
    for c, n in [(2, 6), (3, 5), (4, 4)]:
        mods = unnormalized_moduli(c, n)
        assert float(np.max(mods)) <= n + 1e-12
        # k = c^(n-1) hits every root equal to 1
        assert mods[-1] == pytest.approx(n, abs=1e-12)


def test_lift_children_of_constant_eigenvalue():
    children = lift_eigenvalue(2, 1, 1)
    assert [child.k for child in children] == [1, 2]
    assert children[0].value == pytest.approx(1 + np.exp(1j * np.pi), abs=1e-12)
    assert children[1].value == pytest.approx(2.0, abs=1e-12)


def test_lift_satisfies_additive_identity():
    for c in (2, 3):
        for n in range(1, 5):
            base = c ** (n - 1)
            for k in range(1, base + 1):
                parent = unnormalized_eigenvalue(c, n, k)
                for child in lift_eigenvalue(c, n, k):
                    predicted = parent + np.exp(2j * np.pi * child.k / c**n)
                    assert child.value == pytest.approx(predicted, abs=1e-9)


def test_lift_rejects_bad_arguments():
    with pytest.raises(NotFirstOrder):
        lift_eigenvalue(1, 2, 1)
    with pytest.raises(DomainError):
        lift_eigenvalue(2, 2, 3)
    with pytest.raises(DomainError):
        unnormalized_eigenvalue(3, 2, 0)
    with pytest.raises(NotFirstOrder):
        unnormalized_values(0, 3)
