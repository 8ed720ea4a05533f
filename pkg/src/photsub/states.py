"""Photon-subtracted squeezed state constructors and closed-form properties.

Builds PASSV (photon-annihilated single-mode squeezed vacuum) and SPATSV
(symmetrically photon-annihilated two-mode squeezed vacuum) states, their
finite seed-superposition representations, the mean-photon maps and the
energy-balancing solver used in fixed-total-energy comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, sqrt

import numpy as np
from scipy.optimize import bisect

from . import fock
from .errors import OutOfRange
from .fock import FockState1, TwoModeDiagonalState


@dataclass(frozen=True)
class PassvSpec:
    """Single-mode subtraction spec: pre-subtraction energy, order, angle."""

    lam: float  # mean photons of the pre-subtraction squeezed vacuum, sinh^2 r
    m: int = 0  # number of subtracted photons
    chi: float = 0.0  # squeezing angle

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be >= 0")
        if self.m < 0 or int(self.m) != self.m:
            raise ValueError("m must be a nonnegative integer")

    @property
    def r(self) -> float:
        return float(np.arcsinh(np.sqrt(self.lam)))


@dataclass(frozen=True)
class SpatsvSpec:
    """Two-mode symmetric subtraction spec."""

    lam: float  # mean photons per mode of the pre-subtraction TSV
    m: int = 0
    chi: float = 0.0

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be >= 0")
        if self.m < 0 or int(self.m) != self.m:
            raise ValueError("m must be a nonnegative integer")

    @property
    def r(self) -> float:
        return float(np.arcsinh(np.sqrt(self.lam)))


def legendre_p(m: int, x):
    """Legendre polynomial P_m(x) by the three-term recurrence (complex ok)."""
    if m < 0 or int(m) != m:
        raise ValueError("m must be a nonnegative integer")
    if m == 0:
        return 1.0 + 0 * x
    p_prev, p = 1.0 + 0 * x, x
    for k in range(1, m):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    return p


def passv_norm_squared(lam: float, m: int) -> float:
    """<SSV| a^dag^m a^m |SSV> = m! (-i sqrt(lam))^m P_m(i sqrt(lam))."""
    val = factorial(m) * (-1j * sqrt(lam)) ** m * legendre_p(m, 1j * sqrt(lam))
    return float(val.real)


def spatsv_norm_squared(lam: float, m: int) -> float:
    """<TSV| (a1^dag a2^dag)^m (a1 a2)^m |TSV> = (m!)^2 lam^m P_m(2 lam + 1)."""
    return float(factorial(m) ** 2 * lam**m * legendre_p(m, 2.0 * lam + 1.0))


def passv(spec: PassvSpec, cutoff: int | None = None) -> FockState1:
    """PASSV state: m-fold photon subtraction from squeezed vacuum."""
    ssv = fock.squeezed_vacuum(spec.r, spec.chi, cutoff)
    state, _ = fock.subtract_photons(ssv, spec.m)
    return state


def spatsv(spec: SpatsvSpec, cutoff: int | None = None) -> TwoModeDiagonalState:
    """SPATSV state: symmetric m-fold subtraction from two-mode squeezed vacuum."""
    tsv = fock.two_mode_squeezed_vacuum(spec.lam, spec.chi, cutoff)
    state, _ = fock.subtract_photons(tsv, spec.m)
    return state


def passv_seed(spec: PassvSpec) -> FockState1:
    """Seed superposition whose squeezing reproduces the PASSV state.

    Components |m - 2l>, l = 0..floor(m/2), with weights
    (1/(l! sqrt((m-2l)!))) * (e^{-i chi} sqrt((1+lam)/lam) / 2)^l.
    """
    m, lam, chi = spec.m, spec.lam, spec.chi
    if m == 0:
        return FockState1(np.array([1.0 + 0j]))
    if lam == 0:
        raise OutOfRange("seed representation is singular at lam = 0 for m > 0")
    amps = np.zeros(m + 1, dtype=complex)
    z = np.exp(-1j * chi) * 0.5 * sqrt((1.0 + lam) / lam)
    for l in range(m // 2 + 1):
        amps[m - 2 * l] = z**l / (factorial(l) * sqrt(factorial(m - 2 * l)))
    return FockState1(amps).normalized()


def spatsv_seed(spec: SpatsvSpec) -> TwoModeDiagonalState:
    """Seed superposition sum_k C^m_k |k,k> whose two-mode squeezing gives SPATSV.

    C^m_k is binomial-weighted: C(m,k) (lam/(1+lam))^{k/2} e^{i chi k}, with
    overall normalization sqrt((1+lam)^m / P_m(2 lam + 1)).
    """
    m, lam, chi = spec.m, spec.lam, spec.chi
    amps = np.zeros(m + 1, dtype=complex)
    ratio = sqrt(lam / (1.0 + lam)) if lam > 0 else 0.0
    for k in range(m + 1):
        amps[k] = comb(m, k) * ratio**k * np.exp(1j * chi * k)
    return TwoModeDiagonalState(amps).normalized()


# ---------------------------------------------------------------------------
# Mean photon numbers
# ---------------------------------------------------------------------------


def _ssv_factorial_moment(k: int, lam: float) -> float:
    """<a^dag^k a^k> of a squeezed vacuum with mean photons lam, by recursion
    over the Bogoliubov word applied to vacuum (exact, cutoff-free)."""
    from .moments import bogoliubov_vacuum_moment_1m

    return bogoliubov_vacuum_moment_1m(k, k, lam)


def passv_mean_photons(lam: float, m: int) -> float:
    """Mean photon number of the m-subtracted squeezed vacuum.

    Closed forms for m <= 3; computed from exact factorial moments above.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if m == 0:
        return lam
    if m == 1:
        return 3.0 * lam + 1.0
    if m == 2:
        return 3.0 * lam * (3.0 + 5.0 * lam) / (1.0 + 3.0 * lam)
    if m == 3:
        return (3.0 + 30.0 * lam + 35.0 * lam**2) / (3.0 + 5.0 * lam)
    if lam == 0:
        # the subtracted state degenerates to |0> (even m) or |1> (odd m)
        return float(m % 2)
    num = _ssv_factorial_moment(m + 1, lam)
    den = _ssv_factorial_moment(m, lam)
    return float((num / den).real)


def spatsv_mean_photons(lam: float, m: int) -> float:
    """Mean photons per mode of the symmetrically m-subtracted TSV."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if m == 0:
        return lam
    if lam == 0:
        return 0.0
    from .moments import bogoliubov_vacuum_moment_2m

    num = bogoliubov_vacuum_moment_2m(m + 1, m + 1, m, m, lam)
    den = bogoliubov_vacuum_moment_2m(m, m, m, m, lam)
    return float((num / den).real)


def balance_energy(target_lam: float, m: int, kind: str = "single") -> float:
    """Invert the mean-photon map: find lam0 with mean(lam0, m) = target_lam.

    ``kind`` selects the single-mode (PASSV) or two-mode (SPATSV) map.  The
    maps are monotone in lam, so a bracketed bisection is used.  Raises
    OutOfRange when the target lies below the map's infimum (odd-m PASSV has
    mean >= 1 for every lam).
    """
    if kind == "single":
        mean = lambda lam: passv_mean_photons(lam, m)
    elif kind == "two_mode":
        mean = lambda lam: spatsv_mean_photons(lam, m)
    else:
        raise ValueError("kind must be 'single' or 'two_mode'")
    if m == 0:
        if target_lam < 0:
            raise OutOfRange("target energy must be >= 0")
        return float(target_lam)
    lo = 0.0
    f_lo = mean(lo) - target_lam
    if abs(f_lo) < 1e-14:
        return lo
    if f_lo > 0:
        raise OutOfRange(
            f"target {target_lam} below the infimum {mean(lo)} of the m={m} map"
        )
    hi = max(target_lam, 1.0)
    while mean(hi) < target_lam:
        hi *= 2.0
        if hi > 1e12:
            raise OutOfRange("target energy unreachable")
    root = bisect(lambda lam: mean(lam) - target_lam, lo, hi, xtol=1e-15, rtol=1e-14)
    # polish the relative residual
    return float(root)
