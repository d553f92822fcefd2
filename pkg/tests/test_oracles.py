import math

import numpy as np
import pytest

from dissipent import (
    BathSpec,
    ConfigError,
    DiscreteBath,
    DomainError,
    MomentPair,
    NumericalError,
    OscillatorParams,
    discrete_bath_moments,
    discretize_oscillator_bath,
    discretize_spin_bath,
    ed_fock_convergence,
    gaussian_entropy,
    kernel_eigenvalue_entropy,
    kernel_from_moments,
    oscillator_entropy_expansion,
    oscillator_f,
    oscillator_moments,
    ring_kernel_entropy,
    ring_kernel_eigenvalues,
    spin_boson_ed,
    trace_power,
)

# ------------------------------------------------------------------ Gaussian entropy


def test_gaussian_entropy_pure_state():
    assert gaussian_entropy(0.5) == 0.0


def test_gaussian_entropy_value():
    # 1.5 ln 1.5 - 0.5 ln 0.5, frozen from direct arithmetic
    assert gaussian_entropy(1.0) == pytest.approx(0.9547712524422192, rel=1e-14)


def test_gaussian_entropy_asymptote():
    nu = 1e4
    assert abs(gaussian_entropy(nu) - (math.log(nu) + 1.0)) < 1e-6


def test_gaussian_entropy_monotone():
    nus = np.linspace(0.5, 20.0, 200)
    vals = [gaussian_entropy(n) for n in nus]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_gaussian_entropy_domain():
    with pytest.raises(DomainError):
        gaussian_entropy(0.49)


# ------------------------------------------------------------------ discretised bath


def test_discretize_oscillator_bath_reproduces_spectral_weight():
    # sum of (pi/2) lambda^2/omega over all modes equals integral of J = eta w
    eta, wc = 1.0, 100.0
    db = discretize_oscillator_bath(eta, wc, 200, omega_min=1e-3)
    total = np.sum(0.5 * math.pi * db.couplings**2 / db.omegas)
    target = eta * (wc**2 - (1e-3) ** 2) / 2.0
    assert total == pytest.approx(target, rel=1e-12)


def test_discretize_spin_bath_reproduces_spectral_weight():
    bath = BathSpec(s=0.5, alpha=0.3, cutoff=10.0)
    db = discretize_spin_bath(bath, 100)
    # sum lambda^2 = integral of J over the discretised window
    lo = 1e-3 * 10.0
    s = bath.s
    target = 2 * bath.alpha * bath.cutoff ** (1 - s) * (10.0 ** (s + 1) - lo ** (s + 1)) / (s + 1)
    assert np.sum(db.couplings**2) == pytest.approx(target, rel=1e-12)


def test_discrete_bath_decoupled():
    p = OscillatorParams(omega0=1.0, eta=0.0, omega_c=100.0)
    cov = discrete_bath_moments(p, 16)
    assert cov.q2 == pytest.approx(0.5, rel=1e-12)
    assert cov.p2 == pytest.approx(0.5, rel=1e-12)


def test_discrete_bath_matches_q2_closed_form():
    # kappa = 0.5, logarithmic scheme, 400 modes: <q^2> within 1%
    p = OscillatorParams(omega0=1.0, eta=1.0, omega_c=100.0)
    cov = discrete_bath_moments(p, 400)
    assert cov.q2 == pytest.approx(oscillator_f(0.5) / 2.0, rel=0.01)


@pytest.mark.parametrize("kappa", [0.2, 0.5, 1.0, 2.0, 5.0])
def test_discrete_bath_matches_moments_deep_cutoff(kappa):
    # in the true large-cutoff regime both moments land on the closed forms
    p = OscillatorParams(omega0=1.0, eta=2.0 * kappa, omega_c=1e4)
    m = oscillator_moments(p)
    cov = discrete_bath_moments(p, 400)
    assert cov.q2 == pytest.approx(m.q2, rel=0.01)
    assert cov.p2 == pytest.approx(m.p2, rel=0.01)
    assert cov.nu >= 0.5


@pytest.mark.parametrize("kappa", [0.2, 0.5, 1.0, 2.0])
def test_discrete_bath_convergence_halves(kappa):
    # successive-refinement differences drop at least 2x per doubling
    # (measured against the next refinement; the scheme is ~2nd order)
    p = OscillatorParams(omega0=1.0, eta=2.0 * kappa, omega_c=100.0)
    cov = {n: discrete_bath_moments(p, n) for n in (100, 200, 400, 800)}
    for field in ("q2", "p2"):
        diffs = [
            abs(getattr(cov[n], field) - getattr(cov[2 * n], field))
            for n in (100, 200, 400)
        ]
        assert diffs[0] / diffs[1] > 2.0
        assert diffs[1] / diffs[2] > 2.0


def test_discrete_bath_linear_scheme_agrees():
    p = OscillatorParams(omega0=1.0, eta=1.0, omega_c=100.0)
    log_cov = discrete_bath_moments(p, 400, scheme="logarithmic")
    lin_cov = discrete_bath_moments(p, 4000, scheme="linear")
    assert lin_cov.q2 == pytest.approx(log_cov.q2, rel=5e-3)


def test_discretize_validation():
    with pytest.raises(ConfigError):
        discretize_oscillator_bath(1.0, 100.0, 4)
    with pytest.raises(ConfigError):
        discrete_bath_moments(OscillatorParams(1.0, 1.0, 100.0), 100, scheme="cubic")


# ------------------------------------------------------------------ ring kernel


def test_ring_trace_is_one():
    lam = ring_kernel_eigenvalues(1.0, 100.0)
    assert abs(float(np.sum(lam)) - 1.0) < 1e-10


def test_ring_entropy_matches_closed_form():
    a, length = 1.0, 100.0  # a L^2 = 1e4
    s_ring = ring_kernel_entropy(a, length)
    s_closed = 0.5 * (math.log(a * length**2) + 1.0 - math.log(math.pi))
    assert abs(s_ring - s_closed) / s_closed < 0.01


def test_ring_doubling_length_adds_ln2():
    a = 1.0
    gap = ring_kernel_entropy(a, 200.0) - ring_kernel_entropy(a, 100.0)
    assert gap == pytest.approx(math.log(2.0), rel=0.02)


def test_ring_tail_guard():
    with pytest.raises(NumericalError):
        ring_kernel_eigenvalues(1.0, 100.0, n_max=40)


# ------------------------------------------------------------------ replica traces


def kernel_ab(ratio):
    # unit-trace kernel with a/b = ratio via nu = sqrt(ratio)/2
    nu = math.sqrt(ratio) / 2.0
    return kernel_from_moments(MomentPair(q2=nu, p2=nu))


def test_trace_power_normalisation():
    k = kernel_ab(100.0)
    res = trace_power(k, 1)
    assert res.direct == pytest.approx(1.0, abs=1e-12)
    assert res.closed_form == pytest.approx(1.0, abs=1e-12)


def test_trace_power_purity():
    # Tr rho^2 = 1/(2 nu) for a Gaussian state
    k = kernel_ab(100.0)
    res = trace_power(k, 2)
    assert res.direct == pytest.approx(0.1, rel=1e-12)
    assert abs(res.closed_form - res.direct) / res.direct < 0.04


def test_trace_power_identity_order_eps_squared():
    # log-deviation bounded by n * eps^2 per replica factor
    k = kernel_ab(100.0)
    eps = math.sqrt(4.0 * k.b / k.a)
    for n in (1, 2, 4, 8, 16, 32, 64):
        res = trace_power(k, n)
        assert abs(math.log(res.closed_form / res.direct)) <= n * eps**2


def test_trace_power_domain():
    with pytest.raises(DomainError):
        trace_power(kernel_ab(100.0), 0)


def test_series_entropy_reconstruction():
    # term-by-term geometric series equals the resummed closed form
    k = kernel_ab(100.0)
    s_series, s_closed = kernel_eigenvalue_entropy(k)
    assert abs(s_series - s_closed) < 1e-8
    # and both sit within O(eps) of the moment-expansion entropy
    m = MomentPair(q2=5.0, p2=5.0)  # eps = 0.2
    assert abs(s_closed - oscillator_entropy_expansion(m)) < 0.5 * m.eps


# ------------------------------------------------------------------ exact diagonalisation


def two_mode_bath(scale=1.0):
    return DiscreteBath(
        omegas=np.array([0.6, 1.4]),
        couplings=scale * np.array([0.3, 0.5]),
        scheme="manual",
        convention="spin",
    )


def test_ed_decoupled_spin():
    st = spin_boson_ed(1.0, two_mode_bath(0.0), fock_cut=6)
    assert st.sx == pytest.approx(1.0, abs=1e-12)
    assert st.entropy == pytest.approx(0.0, abs=1e-12)


def test_ed_symmetry_and_state_validity():
    st = spin_boson_ed(1.0, two_mode_bath(1.0), fock_cut=8)
    assert abs(st.sz) < 1e-10
    assert 0.0 < st.sx < 1.0
    assert 0.0 < st.entropy < math.log(2.0)


def test_ed_monotone_under_coupling_scale():
    scales = [0.0, 0.4, 0.8, 1.2, 1.6, 2.0]
    states = [spin_boson_ed(1.0, two_mode_bath(g), fock_cut=8) for g in scales]
    sxs = [s.sx for s in states]
    ents = [s.entropy for s in states]
    assert all(a > b for a, b in zip(sxs, sxs[1:]))
    assert all(a < b for a, b in zip(ents, ents[1:]))


def test_ed_fock_truncation_converged():
    assert ed_fock_convergence(1.0, two_mode_bath(1.0), 8) < 1e-3


def test_ed_dimension_guard():
    big = DiscreteBath(
        omegas=np.ones(4), couplings=np.ones(4), scheme="manual", convention="spin"
    )
    with pytest.raises(ConfigError):
        spin_boson_ed(1.0, big, fock_cut=10)  # 2 * 10^4 > 2^14


def test_ed_reduced_state_from_discretized_bath():
    bath = discretize_spin_bath(BathSpec(s=1.0, alpha=0.05, cutoff=5.0), n_modes=3)
    st = spin_boson_ed(1.0, bath, fock_cut=5)
    assert abs(st.sz) < 1e-10
    assert 0.0 < st.sx <= 1.0
