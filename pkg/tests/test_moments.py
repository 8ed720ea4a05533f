"""Exact moment tables: Fock cross-validation, loss, quadratures, Mandel Q."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photsub import fock, moments, states
from photsub.errors import MomentOrderMissing
from photsub.states import PassvSpec, SpatsvSpec


def _real(x):
    return float(complex(x).real)


def test_coherent_table_entries():
    alpha = 1.2 - 0.7j
    t = moments.coherent_table(alpha)
    assert abs(complex(t.entry((1, 0))) - np.conj(alpha)) < 1e-14
    assert abs(complex(t.entry((2, 3))) - np.conj(alpha) ** 2 * alpha**3) < 1e-12


def test_vacuum_table_entries():
    t = moments.vacuum_table((0,))
    assert complex(t.entry((0, 0))) == 1.0
    assert complex(t.entry((1, 1))) == 0.0
    assert complex(t.entry((3, 2))) == 0.0


@pytest.mark.parametrize("m", [0, 1, 2])
@pytest.mark.parametrize("lam", [0.4, 2.0])
def test_single_mode_table_matches_fock(lam, m):
    state = states.passv(PassvSpec(lam, m), cutoff=300)
    num = moments.table_from_state(state, max_order=4)
    exact = moments.passv_moment_table(lam, m, max_order=4)
    for p in range(3):
        for q in range(3):
            a = complex(num.entry((p, q)))
            b = complex(exact.entry((p, q)))
            assert abs(a - b) < 1e-9 * max(1.0, abs(b))


@pytest.mark.parametrize("m", [0, 1, 2])
def test_two_mode_table_matches_fock(m):
    lam = 0.6
    state = states.spatsv(SpatsvSpec(lam, m), cutoff=200)
    num = moments.table_from_state(state, max_order=4)
    exact = moments.spatsv_moment_table(lam, m, max_order=8)
    for key in [(1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1), (2, 2, 0, 0), (1, 0, 0, 1)]:
        a = complex(num.entry(key))
        b = complex(exact.entry(key))
        assert abs(a - b) < 1e-9 * max(1.0, abs(b))


def test_two_mode_selection_rule():
    # |n,n> support forces equal net ladder change in both modes
    t = moments.spatsv_moment_table(0.7, 1, max_order=8)
    assert complex(t.entry((1, 0, 0, 0))) == 0.0
    assert complex(t.entry((2, 0, 1, 0))) == 0.0
    assert abs(complex(t.entry((2, 0, 2, 0)))) > 0.0  # p-q = r-s = 2 survives


def test_loss_scales_normal_moments():
    lam, eta = 0.9, 0.55
    t = moments.passv_moment_table(lam, 1, max_order=6)
    lossy = moments.apply_loss(t, eta)
    for p, q in [(1, 1), (2, 2), (2, 0)]:
        expected = complex(t.entry((p, q))) * eta ** ((p + q) / 2)
        assert abs(complex(lossy.entry((p, q))) - expected) < 1e-12 * max(
            1.0, abs(expected)
        )


def test_loss_composition():
    t = moments.passv_moment_table(1.3, 2, max_order=6)
    once = moments.apply_loss(moments.apply_loss(t, 0.8), 0.7)
    both = moments.apply_loss(t, 0.56)
    for key in [(1, 1), (2, 2), (3, 3)]:
        assert abs(complex(once.entry(key)) - complex(both.entry(key))) < 1e-12


def test_squeezed_vacuum_quadrature_variances():
    lam = 1.1
    r = float(np.arcsinh(np.sqrt(lam)))
    t = moments.passv_moment_table(lam, 0, max_order=4)
    # chi = 0 squeezes Y and anti-squeezes X
    assert abs(moments.quadrature_variance(t, np.pi / 2) - 0.5 * np.exp(-2 * r)) < 1e-10
    assert abs(moments.quadrature_variance(t, 0.0) - 0.5 * np.exp(2 * r)) < 1e-10


def test_quadrature_heisenberg_bound():
    for m in range(3):
        t = moments.passv_moment_table(0.8, m, max_order=4)
        vx = moments.quadrature_variance(t, 0.0)
        vy = moments.quadrature_variance(t, np.pi / 2)
        assert vx * vy >= 0.25 - 1e-12


def test_two_mode_difference_quadrature():
    # the TSV difference quadrature is squeezed from the vacuum level 0.5
    lam = 0.9
    r = float(np.arcsinh(np.sqrt(lam)))
    t = moments.spatsv_moment_table(lam, 0, max_order=8)
    assert abs(moments.quadrature_difference_variance(t) - 0.5 * np.exp(-2 * r)) < 1e-10
    # the orthogonal angle is anti-squeezed
    assert (
        abs(moments.quadrature_difference_variance(t, np.pi / 2) - 0.5 * np.exp(2 * r))
        < 1e-10
    )


def test_mandel_q_coherent_and_thermal():
    assert abs(moments.mandel_q(moments.coherent_table(1.7))) < 1e-12
    # the single-mode marginal of a TSV is thermal: Q = mean photons
    lam = 0.8
    state = fock.two_mode_squeezed_vacuum(lam, cutoff=200)
    marg = moments.marginal_table(state, max_order=4)
    assert abs(moments.mandel_q(marg) - lam) < 1e-8


def test_mandel_q_negative_for_subtracted_state():
    t = moments.marginal_table(
        states.spatsv(SpatsvSpec(0.1, 2), cutoff=100), max_order=4
    )
    assert moments.mandel_q(t) < 0.0


@given(eta=st.floats(min_value=0.05, max_value=1.0))
@settings(max_examples=25, deadline=None)
def test_mandel_q_thins_linearly(eta):
    # binomial loss scales Mandel Q by eta for any state
    t = moments.marginal_table(
        states.spatsv(SpatsvSpec(0.4, 1), cutoff=120), max_order=4
    )
    q0 = moments.mandel_q(t)
    q_eta = moments.mandel_q(moments.apply_loss(t, eta))
    assert abs(q_eta - eta * q0) < 1e-9


def test_joint_distribution_normalized_and_diagonal():
    p = moments.joint_photon_distribution(states.spatsv(SpatsvSpec(0.6, 1), cutoff=80))
    assert abs(p.sum() - 1.0) < 1e-10
    off = p - np.diag(np.diag(p))
    assert np.max(np.abs(off)) < 1e-14


def test_missing_order_raises():
    t = moments.table_from_state(states.passv(PassvSpec(0.5, 0), cutoff=100), max_order=2)
    with pytest.raises(MomentOrderMissing):
        t.entry((3, 3))


def test_bogoliubov_moments_match_fock():
    lam = 0.9
    state = fock.squeezed_vacuum(float(np.arcsinh(np.sqrt(lam))), cutoff=300)
    num = moments.table_from_state(state, max_order=6)
    for p, q in [(1, 1), (2, 2), (2, 0), (3, 1), (3, 3)]:
        exact = complex(moments.bogoliubov_vacuum_moment_1m(p, q, lam))
        assert abs(complex(num.entry((p, q))) - exact) < 1e-8 * max(1.0, abs(exact))
