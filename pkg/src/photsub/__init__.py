"""photsub: phase estimation with multi-photon-subtracted squeezed light.

A numpy/scipy/mpmath toolkit for single- and correlated-interferometer
phase estimation with photon-subtracted squeezed vacuum states:

- ``fock``: truncated Fock-space state construction and a brute-force
  interferometer oracle used to validate the analytic engine.
- ``states``: subtracted-state constructors, seed representations,
  closed-form mean photon numbers and the energy-balancing solver.
- ``opalg``: exact normal-ordered operator algebra with analytic phase
  derivatives (jets) and arbitrary-precision expectation values.
- ``moments``: exact cutoff-free moment tables for all input states.
- ``metrology``: phase uncertainty, quantum Fisher information, noise
  reduction factor and correlated covariance uncertainty, with all
  asymptotic closed forms.
- ``experiments``: figure presets, config-driven parameter sweeps and the
  engine-vs-oracle comparison harness (also exposed as the ``photsub`` CLI).
"""

from . import errors, experiments, fock, metrology, moments, opalg, states
from .errors import PhotsubError
from .metrology import (
    CorrelatedConfig,
    SingleMziConfig,
    correlated_uncertainty,
    correlated_uncertainty_asymptotic,
    cramer_rao_bound,
    nrf,
    nrf_asymptotic,
    phi_for_tau,
    qfi,
    single_phase_uncertainty,
)
from .states import (
    PassvSpec,
    SpatsvSpec,
    balance_energy,
    passv,
    passv_mean_photons,
    passv_seed,
    spatsv,
    spatsv_mean_photons,
    spatsv_seed,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelatedConfig",
    "PassvSpec",
    "PhotsubError",
    "SingleMziConfig",
    "SpatsvSpec",
    "balance_energy",
    "correlated_uncertainty",
    "correlated_uncertainty_asymptotic",
    "cramer_rao_bound",
    "errors",
    "experiments",
    "fock",
    "metrology",
    "moments",
    "nrf",
    "nrf_asymptotic",
    "opalg",
    "passv",
    "passv_mean_photons",
    "passv_seed",
    "phi_for_tau",
    "qfi",
    "single_phase_uncertainty",
    "spatsv",
    "spatsv_mean_photons",
    "spatsv_seed",
    "states",
]
