"""Phase-estimation figures of merit for subtracted-squeezed-light interferometry.

Single Mach-Zehnder quantities (read-out difference uncertainty, quantum
Fisher information, Cramer-Rao bound) and correlated-interferometer
quantities (noise reduction factor, normalized covariance uncertainty),
all evaluated exactly through the symbolic operator engine, plus the
asymptotic closed forms used for cross-checks and regime analysis.

Mode bookkeeping
----------------
Single scheme: mode 0 carries the coherent state |sqrt(mu) e^{i psi}>,
mode 1 the quantum (subtracted squeezed) state.  The beamsplitter pair of
the Mach-Zehnder with internal phase phi acts as the 2x2 map with entries
u = (e^{i phi} + 1)/2 and v = (e^{i phi} - 1)/2, chosen so that the
read-out photon-number difference has mean (mu - lam) cos(phi) for the
unsubtracted state.

Correlated scheme: modes 0 and 1 carry the two entangled quantum modes,
each mixed in its own interferometer (phases phi1, phi2) with an identical
coherent state.  The coherent inputs are handled displacement-first: the
read-out operator images are u(phi_k) a_k + v(phi_k) beta with beta the
coherent amplitude, which is exact because the substituted polynomials are
normal-ordered (no vacuum contractions survive the expectation).

Detection loss eta is a beamsplitter to vacuum on each read-out channel:
every normally-ordered read-out monomial is scaled by eta^(total degree/2)
before the port substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, isfinite, pi, sin, sqrt

import mpmath as mp

from . import moments, opalg
from .errors import (
    NonPositiveQfi,
    Singular,
    UnsupportedOrder,
    ZeroMeanPhoton,
)
from .opalg import Jet, LinearModeMap, OperatorPolynomial
from .states import PassvSpec, SpatsvSpec

SQRT2 = sqrt(2.0)


@dataclass(frozen=True)
class SingleMziConfig:
    """Single Mach-Zehnder scene: quantum input, coherent input, phase, loss."""

    quantum: PassvSpec
    mu: float  # coherent mean photon number |alpha|^2
    phi: float  # interferometer working phase
    psi: float = 0.0  # coherent phase
    eta: float = 1.0  # detection efficiency on both read-out ports

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError("mu must be >= 0")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError("eta must lie in [0, 1]")


@dataclass(frozen=True)
class CorrelatedConfig:
    """Twin-interferometer scene: entangled pair, two identical coherent states.

    The central phases are equal, phi1 = phi2 = phi; ``tau`` = cos^2(phi/2)
    is the fraction of quantum light transmitted to each read-out port.
    """

    quantum: SpatsvSpec
    mu: float
    phi: float
    psi: float = pi / 2
    eta: float = 1.0

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError("mu must be >= 0")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError("eta must lie in [0, 1]")

    @property
    def tau(self) -> float:
        return cos(self.phi / 2.0) ** 2


def phi_for_tau(tau: float) -> float:
    """Working phase whose quantum-light transmission cos^2(phi/2) equals tau."""
    if not 0.0 <= tau <= 1.0:
        raise ValueError("tau must lie in [0, 1]")
    return 2.0 * float(mp.acos(mp.sqrt(tau)))


# ---------------------------------------------------------------------------
# Shared engine pieces
# ---------------------------------------------------------------------------


def _scale_loss(poly: OperatorPolynomial, eta) -> OperatorPolynomial:
    """Apply equal-efficiency detection loss to a read-out-level polynomial."""
    if eta == 1:
        return poly
    out = {}
    for m, c in poly.terms.items():
        total = sum(p + q for _, p, q in m)
        out[m] = c * eta ** (total / 2.0) if total else c
    return OperatorPolynomial(out)


def _phase_jet(phi, slot: int):
    """e^{i phi} as a jet differentiating in slot 1 or 2."""
    e = mp.exp(mp.mpc(0, phi))
    de = mp.mpc(0, 1) * e
    if slot == 1:
        return Jet(e, d1=de)
    return Jet(e, d2=de)


def _mzi_entries(phi, slot: int = 0):
    """(u, v) Mach-Zehnder map entries; jets when slot is 1 or 2."""
    if slot:
        e = _phase_jet(phi, slot)
        half = mp.mpf("0.5")
        return (e + 1) * half, (e - 1) * half
    e = complex(mp.exp(mp.mpc(0, phi)))
    return (e + 1) / 2, (e - 1) / 2


def _single_port_map(phi, jet: bool = False) -> LinearModeMap:
    """Read-out modes (0, 1) expressed in input modes (0 coherent, 1 quantum)."""
    u, v = _mzi_entries(phi, 1 if jet else 0)
    return LinearModeMap({0: ({0: u, 1: v}, 0), 1: ({0: v, 1: u}, 0)})


def _jet_value(x):
    return x.f if isinstance(x, Jet) else x


# ---------------------------------------------------------------------------
# Single-interferometer figures of merit
# ---------------------------------------------------------------------------


def single_readout_moments(cfg: SingleMziConfig) -> dict:
    """Moments (p, q) -> <N5^p N6^q>, p + q <= 2, of the lossy read-out ports.

    Exposed for the oracle-comparison path: these are exactly the quantities
    that enter the uncertainty formula.
    """
    port_map = _single_port_map(cfg.phi)
    tables = _single_tables(cfg)
    out = {}
    for p, q in [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)]:
        obs = opalg.power(OperatorPolynomial.number(0), p)
        obs = opalg.multiply(obs, opalg.power(OperatorPolynomial.number(1), q))
        obs = _scale_loss(obs, cfg.eta)
        val = opalg.expect(opalg.substitute(obs, port_map), tables)
        out[(p, q)] = complex(val).real
    return out


def _single_tables(cfg: SingleMziConfig):
    alpha = sqrt(cfg.mu) * complex(mp.exp(mp.mpc(0, cfg.psi)))
    spec = cfg.quantum
    return [
        moments.coherent_table(alpha, mode=0),
        moments.passv_moment_table(spec.lam, spec.m, chi=spec.chi, mode=1),
    ]


def single_phase_uncertainty(cfg: SingleMziConfig) -> float:
    """Uncertainty sqrt(Var o) / |d<o>/dphi| of the photon-number difference.

    The phase derivative is carried analytically through the beamsplitter
    map; a vanishing derivative raises Singular.
    """
    port_map = _single_port_map(cfg.phi, jet=True)
    tables = _single_tables(cfg)
    diff = OperatorPolynomial.number(0) - OperatorPolynomial.number(1)
    mean = opalg.expect(opalg.substitute(_scale_loss(diff, cfg.eta), port_map), tables)
    second = opalg.expect(
        opalg.substitute(_scale_loss(opalg.multiply(diff, diff), cfg.eta), port_map),
        tables,
    )
    mean_v = complex(_jet_value(mean)).real
    var = complex(_jet_value(second)).real - mean_v**2
    slope = complex(mean.d1).real
    if abs(slope) < 1e-300 or not isfinite(slope):
        raise Singular("read-out mean has zero phase derivative at this working point")
    var = max(var, 0.0)
    return sqrt(var) / abs(slope)


def qfi(cfg: SingleMziConfig) -> float:
    """Quantum Fisher information 4 Var(n3) for the lossless pure inputs.

    The phase generator is the photon number of the internal mode
    a3 = (a_coh + a_quantum)/sqrt(2); eta plays no role here.
    """
    half = 0.5
    n3 = OperatorPolynomial()
    for m1 in (0, 1):
        for m2 in (0, 1):
            n3 = n3 + opalg.multiply(
                OperatorPolynomial.ladder(m1, dagger=True),
                OperatorPolynomial.ladder(m2),
            ).scaled(half)
    tables = _single_tables(cfg)
    mean = complex(opalg.expect(n3, tables)).real
    second = complex(opalg.expect(opalg.multiply(n3, n3), tables)).real
    return 4.0 * max(second - mean**2, 0.0)


def cramer_rao_bound(fq: float) -> float:
    """Lower uncertainty bound 1/sqrt(F_Q)."""
    if fq <= 0:
        raise NonPositiveQfi(f"Fisher information must be positive, got {fq}")
    return 1.0 / sqrt(fq)


# ---------------------------------------------------------------------------
# Correlated-interferometer figures of merit
# ---------------------------------------------------------------------------


def _working_digits(mu: float) -> int:
    """Decimal digits for the high-precision accumulation path."""
    return 40 + 3 * int(mp.log10(mu + 10))


def _correlated_port_map(cfg: CorrelatedConfig, jet: bool) -> LinearModeMap:
    """Read-out operators a5, a7 over quantum modes 0, 1 (displacement-first)."""
    beta = mp.sqrt(mp.mpf(cfg.mu)) * mp.exp(mp.mpc(0, cfg.psi))
    u1, v1 = _mzi_entries(cfg.phi, 1 if jet else 0)
    u2, v2 = _mzi_entries(cfg.phi, 2 if jet else 0)
    return LinearModeMap(
        {0: ({0: u1}, v1 * beta), 1: ({1: u2}, v2 * beta)}
    )


def _correlated_table(cfg: CorrelatedConfig, max_order: int = 8):
    spec = cfg.quantum
    return moments.spatsv_moment_table(
        spec.lam, spec.m, max_order=max_order, chi=spec.chi, modes=(0, 1)
    )


def correlated_readout_moments(cfg: CorrelatedConfig, dps: int | None = None) -> dict:
    """Moments (p, q) -> <N5^p N7^q>, p + q <= 4, of the lossy read-out ports."""
    with mp.workdps(dps or _working_digits(cfg.mu)):
        port_map = _correlated_port_map(cfg, jet=False)
        table = _correlated_table(cfg)
        out = {}
        for p in range(5):
            for q in range(5 - p):
                if p + q == 0:
                    continue
                obs = opalg.power(OperatorPolynomial.number(0), p)
                obs = opalg.multiply(obs, opalg.power(OperatorPolynomial.number(1), q))
                obs = _scale_loss(obs, mp.mpf(cfg.eta))
                val = opalg.expect(opalg.substitute(obs, port_map), [table])
                out[(p, q)] = float(mp.re(val))
        return out


def nrf(cfg: CorrelatedConfig, dps: int | None = None) -> float:
    """Noise reduction factor Var(N5 - N7) / (<N5> + <N7>).

    Values below 1 flag non-classical photon-number correlation between the
    two read-out ports; a dark read-out (zero mean) raises ZeroMeanPhoton.
    """
    with mp.workdps(dps or _working_digits(cfg.mu)):
        port_map = _correlated_port_map(cfg, jet=False)
        table = _correlated_table(cfg)
        eta = mp.mpf(cfg.eta)
        diff = OperatorPolynomial.number(0) - OperatorPolynomial.number(1)
        total = OperatorPolynomial.number(0) + OperatorPolynomial.number(1)
        mean_sum = mp.re(
            opalg.expect(opalg.substitute(_scale_loss(total, eta), port_map), [table])
        )
        if mean_sum <= 0:
            raise ZeroMeanPhoton("no photons reach the read-out ports")
        mean_diff = mp.re(
            opalg.expect(opalg.substitute(_scale_loss(diff, eta), port_map), [table])
        )
        second = mp.re(
            opalg.expect(
                opalg.substitute(
                    _scale_loss(opalg.multiply(diff, diff), eta), port_map
                ),
                [table],
            )
        )
        return float((second - mean_diff**2) / mean_sum)


def correlated_uncertainty(cfg: CorrelatedConfig, dps: int | None = None) -> float:
    """Normalized covariance-measurement uncertainty U_m.

    The joint observable is C = (N5 - N7)^2; the raw uncertainty is
    sqrt(2 Var C) / |d^2 <C> / dphi1 dphi2| with the mixed derivative carried
    analytically (phi1, phi2 as independent jet slots, evaluated at the
    common working point).  The result is divided by the coherent-only bound
    sqrt(2) / (eta mu cos^2(phi/2)).
    """
    with mp.workdps(dps or _working_digits(cfg.mu)):
        port_map = _correlated_port_map(cfg, jet=True)
        table = _correlated_table(cfg)
        eta = mp.mpf(cfg.eta)
        diff = OperatorPolynomial.number(0) - OperatorPolynomial.number(1)
        c_op = opalg.multiply(diff, diff)
        mean_c = opalg.expect(
            opalg.substitute(_scale_loss(c_op, eta), port_map), [table]
        )
        mixed = mp.re(mean_c.d12)
        if abs(mixed) < mp.mpf("1e-300"):
            raise Singular("mixed phase derivative of <C> vanishes here")
        # Var C through the lossy channel: center by the lossy mean, then
        # loss-scale the normally-ordered square (exact, since the mean is
        # the lossy expectation of C itself).
        centered = opalg.center(c_op, Jet(mean_c.f))
        sq = _scale_loss(opalg.multiply(centered, centered), eta)
        var_c = mp.re(
            _jet_value(
                opalg.expect(opalg.substitute(sq, port_map), [table], min_digits=8)
            )
        )
        var_c = var_c if var_c > 0 else mp.mpf(0)
        raw = mp.sqrt(2 * var_c) / abs(mixed)
        classical = mp.sqrt(2) / (eta * mp.mpf(cfg.mu) * mp.cos(cfg.phi / 2) ** 2)
        return float(raw / classical)


# ---------------------------------------------------------------------------
# Asymptotic closed forms
# ---------------------------------------------------------------------------


def nrf_asymptotic(m: int, tau: float, lam: float) -> float:
    """Small-energy noise-reduction-factor expansions, orders m = 0, 1, 2."""
    s = sqrt(lam)
    if m == 0:
        return 1.0 - 2.0 * tau * (s - lam)
    if m == 1:
        return 1.0 - 4.0 * tau * (s - 2.0 * lam)
    if m == 2:
        return 1.0 - 6.0 * tau * (s - 3.0 * lam)
    raise UnsupportedOrder(f"no closed small-energy form for m={m}")


CORRELATED_REGIMES = (
    "low_lambda_bright",
    "high_lambda_bright",
    "dark_fringe_low_lambda",
    "dark_fringe_high_lambda",
)


def correlated_uncertainty_asymptotic(
    regime: str, m: int, *, lam: float = 0.0, tau: float = 1.0, eta: float = 1.0
) -> float:
    """Closed-form normalized uncertainty in the four asymptotic regimes.

    ``low_lambda_bright``: bright coherent beam, weak squeezing (per-order
    expansions in sqrt(lam)).  ``high_lambda_bright``: bright beam, strong
    squeezing (order-independent).  ``dark_fringe_low_lambda`` /
    ``dark_fringe_high_lambda``: quantum-light-dominated read-out near
    phi = 0, limited by detection efficiency only.
    """
    if m < 0 or m > 3:
        raise UnsupportedOrder(f"closed forms cover m = 0..3, got m={m}")
    if regime == "low_lambda_bright":
        s = sqrt(lam)
        te = tau * eta
        if m == 0:
            inner = 2.0 * s - 2.0 * lam
        elif m == 1:
            inner = 4.0 * s + 0.5 * lam * (3.0 * eta * tau - 16.0)
        elif m == 2:
            inner = 6.0 * s + 4.5 * lam * (eta * tau - 4.0)
        else:
            inner = 8.0 * s + lam * (9.0 * eta * tau - 32.0)
        return SQRT2 * (1.0 - te * inner)
    if regime == "high_lambda_bright":
        if lam <= 0:
            raise ValueError("high_lambda_bright requires lam > 0")
        return SQRT2 * (1.0 - tau * eta - tau * eta / (4.0 * lam))
    if regime == "dark_fringe_low_lambda":
        if eta <= 0:
            raise ValueError("dark_fringe_low_lambda requires eta > 0")
        return SQRT2 * sqrt((1.0 - eta) / eta)
    if regime == "dark_fringe_high_lambda":
        factors = {0: sqrt(5.0), 1: sqrt(3.0), 2: sqrt(13.0 / 5.0), 3: sqrt(17.0 / 7.0)}
        return 2.0 * factors[m] * (1.0 - eta)
    raise ValueError(f"unknown regime {regime!r}; expected one of {CORRELATED_REGIMES}")
