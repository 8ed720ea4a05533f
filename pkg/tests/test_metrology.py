"""Phase-estimation figures of merit: exact engine and asymptotic closed forms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photsub import metrology, moments
from photsub.errors import (
    NonPositiveQfi,
    Singular,
    UnsupportedOrder,
    ZeroMeanPhoton,
)
from photsub.metrology import CorrelatedConfig, SingleMziConfig, phi_for_tau
from photsub.states import PassvSpec, SpatsvSpec

SQRT2 = np.sqrt(2.0)


def test_phi_for_tau_round_trip():
    for tau in [0.1, 0.5, 0.9, 1.0]:
        phi = phi_for_tau(tau)
        assert abs(np.cos(phi / 2) ** 2 - tau) < 1e-14


def test_shot_noise_limit():
    cfg = SingleMziConfig(PassvSpec(0.0, 0), mu=100.0, phi=np.pi / 2)
    assert abs(metrology.single_phase_uncertainty(cfg) - 0.1) < 1e-12


def test_shot_noise_limit_with_loss():
    cfg = SingleMziConfig(PassvSpec(0.0, 0), mu=100.0, phi=np.pi / 2, eta=0.98)
    assert abs(metrology.single_phase_uncertainty(cfg) - 1 / np.sqrt(98.0)) < 1e-12


def test_squeezing_beats_shot_noise():
    mu = 100.0
    snl = 1 / np.sqrt(mu)
    cfg = SingleMziConfig(PassvSpec(1.0, 0), mu=mu, phi=np.pi / 2)
    assert metrology.single_phase_uncertainty(cfg) < snl


def test_uncertainty_improves_with_efficiency():
    us = [
        metrology.single_phase_uncertainty(
            SingleMziConfig(PassvSpec(0.5, 1), mu=50.0, phi=np.pi / 2, eta=eta)
        )
        for eta in (0.5, 0.8, 1.0)
    ]
    assert us[0] > us[1] > us[2]


def test_readout_slope_matches_finite_difference():
    h = 1e-6
    base = dict(mu=4.0, phi=0.8)

    def diff_mean(phi):
        m = metrology.single_readout_moments(
            SingleMziConfig(PassvSpec(0.5, 1), mu=base["mu"], phi=phi)
        )
        return m[(1, 0)] - m[(0, 1)]

    fd = (diff_mean(base["phi"] + h) - diff_mean(base["phi"] - h)) / (2 * h)
    # reconstruct the analytic slope from the uncertainty and the variance
    cfg = SingleMziConfig(PassvSpec(0.5, 1), mu=base["mu"], phi=base["phi"])
    m = metrology.single_readout_moments(cfg)
    mean = m[(1, 0)] - m[(0, 1)]
    var = m[(2, 0)] + m[(0, 2)] - 2 * m[(1, 1)] - mean**2
    slope = np.sqrt(var) / metrology.single_phase_uncertainty(cfg)
    assert abs(abs(fd) - slope) < 1e-6 * max(1.0, slope)


def test_qfi_coherent_only():
    cfg = SingleMziConfig(PassvSpec(0.0, 0), mu=100.0, phi=np.pi / 2)
    assert abs(metrology.qfi(cfg) - 200.0) < 1e-9


def test_qfi_grows_with_subtraction_at_fixed_lam():
    mu = 100.0
    f = [
        metrology.qfi(SingleMziConfig(PassvSpec(2.0, m), mu=mu, phi=np.pi / 2))
        for m in (0, 1, 2)
    ]
    assert f[0] < f[1] < f[2]


def test_cramer_rao_bound():
    assert metrology.cramer_rao_bound(4.0) == 0.5
    with pytest.raises(NonPositiveQfi):
        metrology.cramer_rao_bound(0.0)


def test_uncertainty_saturates_bound():
    # exact read-out uncertainty never beats the quantum bound
    cfg = SingleMziConfig(PassvSpec(1.5, 1), mu=200.0, phi=np.pi / 2, psi=np.pi / 2)
    u = metrology.single_phase_uncertainty(cfg)
    bound = metrology.cramer_rao_bound(metrology.qfi(cfg))
    assert u >= bound - 1e-12


def test_singular_working_point():
    with pytest.raises(Singular):
        metrology.single_phase_uncertainty(
            SingleMziConfig(PassvSpec(0.5, 0), mu=10.0, phi=0.0)
        )


def test_quadrature_variance_correspondence():
    # at phi = pi/2 and bright drive the uncertainty reduces to the lossy
    # squeezed-quadrature variance: U = sqrt(2 VarY_lossy / (eta mu))
    lam, m, eta, mu = 1.0, 1, 0.9, 1e6
    cfg = SingleMziConfig(PassvSpec(lam, m), mu=mu, phi=np.pi / 2, eta=eta)
    u = metrology.single_phase_uncertainty(cfg)
    vy = moments.quadrature_variance(
        moments.passv_moment_table(lam, m, max_order=4), np.pi / 2
    )
    predicted = np.sqrt(2 * (eta * vy + (1 - eta) / 2) / (eta * mu))
    assert abs(u - predicted) < 0.01 * predicted


# ---------------------------------------------------------------------------
# Correlated scheme
# ---------------------------------------------------------------------------


def test_nrf_perfect_correlation():
    # full transmission, no coherent light: twin beams have identical counts
    cfg = CorrelatedConfig(SpatsvSpec(0.5, 0), mu=0.0, phi=0.0)
    assert metrology.nrf(cfg) < 1e-12


def test_nrf_dark_readout_raises():
    with pytest.raises(ZeroMeanPhoton):
        metrology.nrf(CorrelatedConfig(SpatsvSpec(0.0, 0), mu=0.0, phi=0.0))


@pytest.mark.parametrize("m", [0, 1, 2])
def test_nrf_matches_small_energy_expansion(m):
    lam, tau = 1e-4, 0.9
    cfg = CorrelatedConfig(SpatsvSpec(lam, m), mu=1e6, phi=phi_for_tau(tau))
    assert abs(metrology.nrf(cfg) - metrology.nrf_asymptotic(m, tau, lam)) < 1e-4


def test_nrf_asymptotic_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        metrology.nrf_asymptotic(3, 0.9, 0.01)


def test_correlated_vacuum_benchmark():
    # with no quantum light the normalized uncertainty approaches sqrt(2)
    cfg = CorrelatedConfig(SpatsvSpec(0.0, 0), mu=1e6, phi=np.pi / 2)
    assert abs(metrology.correlated_uncertainty(cfg) - SQRT2) < 1e-5


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_correlated_matches_low_energy_bright_expansion(m):
    lam, tau, eta, mu = 1e-4, 0.9, 0.95, 1e8
    cfg = CorrelatedConfig(
        SpatsvSpec(lam, m), mu=mu, phi=phi_for_tau(tau), eta=eta, psi=np.pi / 2
    )
    engine = metrology.correlated_uncertainty(cfg)
    closed = metrology.correlated_uncertainty_asymptotic(
        "low_lambda_bright", m, lam=lam, tau=tau, eta=eta
    )
    assert abs(engine - closed) < 2e-4


def test_correlated_matches_high_energy_bright_expansion():
    lam, tau, eta = 200.0, 0.9, 0.95
    cfg = CorrelatedConfig(
        SpatsvSpec(lam, 0), mu=1e8, phi=phi_for_tau(tau), eta=eta, psi=np.pi / 2
    )
    engine = metrology.correlated_uncertainty(cfg)
    closed = metrology.correlated_uncertainty_asymptotic(
        "high_lambda_bright", 0, lam=lam, tau=tau, eta=eta
    )
    # the closed form drops O(1/lam^2) terms
    assert abs(engine - closed) < 0.02 * SQRT2


def test_high_energy_bright_worked_value():
    # eta = 0.98, tau = 0.9, lam = 2: sqrt(2)(1 - 0.882 - 0.11025)
    val = metrology.correlated_uncertainty_asymptotic(
        "high_lambda_bright", 0, lam=2.0, tau=0.9, eta=0.98
    )
    assert abs(val - SQRT2 * (1.0 - 0.882 - 0.11025)) < 1e-12


def test_dark_fringe_closed_forms():
    eta = 0.98
    low = metrology.correlated_uncertainty_asymptotic(
        "dark_fringe_low_lambda", 0, eta=eta
    )
    assert abs(low - SQRT2 * np.sqrt((1 - eta) / eta)) < 1e-12
    high = metrology.correlated_uncertainty_asymptotic(
        "dark_fringe_high_lambda", 1, eta=eta
    )
    assert abs(high - 2 * np.sqrt(3.0) * (1 - eta)) < 1e-12


def test_asymptotic_eta_tau_symmetry():
    # the bright-beam expansions depend on eta and tau only through eta*tau
    for m in range(4):
        a = metrology.correlated_uncertainty_asymptotic(
            "low_lambda_bright", m, lam=1e-3, tau=0.9, eta=0.7
        )
        b = metrology.correlated_uncertainty_asymptotic(
            "low_lambda_bright", m, lam=1e-3, tau=0.7, eta=0.9
        )
        assert abs(a - b) < 1e-12


def test_asymptotic_unsupported_order_and_regime():
    with pytest.raises(UnsupportedOrder):
        metrology.correlated_uncertainty_asymptotic("low_lambda_bright", 4, lam=0.1)
    with pytest.raises(ValueError):
        metrology.correlated_uncertainty_asymptotic("no_such_regime", 0)


def test_subtraction_improves_correlated_uncertainty():
    lam, mu, eta = 0.05, 1e6, 0.98
    phi = phi_for_tau(0.9)
    us = [
        metrology.correlated_uncertainty(
            CorrelatedConfig(SpatsvSpec(lam, m), mu=mu, phi=phi, eta=eta, psi=np.pi / 2)
        )
        for m in (0, 1, 2)
    ]
    assert us[0] > us[1] > us[2]


@given(eta=st.floats(min_value=0.3, max_value=1.0))
@settings(max_examples=10, deadline=None)
def test_correlated_uncertainty_improves_with_efficiency_property(eta):
    phi = phi_for_tau(0.9)

    def u(e):
        return metrology.correlated_uncertainty(
            CorrelatedConfig(SpatsvSpec(0.1, 1), mu=1e4, phi=phi, eta=e, psi=np.pi / 2)
        )

    assert u(eta) >= u(min(1.0, eta + 0.1)) - 1e-9


def test_correlated_readout_moments_match_port_means():
    lam, mu, phi, eta = 0.3, 2.0, 0.7, 0.9
    cfg = CorrelatedConfig(SpatsvSpec(lam, 0), mu=mu, phi=phi, eta=eta, psi=0.3)
    m = metrology.correlated_readout_moments(cfg)
    tau = np.cos(phi / 2) ** 2
    expected = eta * ((1 - tau) * mu + tau * lam)
    assert abs(m[(1, 0)] - expected) < 1e-10
    assert abs(m[(0, 1)] - expected) < 1e-10
