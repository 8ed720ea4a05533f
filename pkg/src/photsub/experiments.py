"""Reproduction presets, config-driven sweeps and the oracle comparison harness.

Everything here is thin plumbing over :mod:`photsub.metrology`: a registry of
named parameter scenes (one per figure of the study this package reproduces),
a deterministic CSV emitter, and a dual-path engine-vs-oracle check.  The
module doubles as the ``photsub`` console entry point with the verbs
``preset``, ``sweep`` and ``oracle-compare``.

CSV schema: a few ``#``-prefixed metadata lines, then the header
``swept_param,m,metric,value,flag``.  Rows are ordered by (axis index, m,
metric); failed points carry an empty value and a non-``ok`` flag, so NaN is
never emitted.  Identical config and precision always produce identical
bytes.

Config files are flat ``key = value`` text; lists are comma-separated.  The
full schema is documented in the README.  The only environment override is
``PHOTSUB_DIGITS`` (working precision for the correlated high-precision
path).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, replace
from math import pi, sqrt

from . import fock, metrology, moments, states
from .errors import (
    ConfigInvalid,
    MemoryBoundExceeded,
    NullState,
    OutOfRange,
    PhotsubError,
    PrecisionInsufficient,
    Singular,
    UnknownPreset,
    ZeroMeanPhoton,
)
from .metrology import CorrelatedConfig, SingleMziConfig, phi_for_tau
from .states import PassvSpec, SpatsvSpec, balance_energy

SINGLE_METRICS = (
    "U",
    "qfi",
    "crb",
    "snl",
    "qfi_classical",
    "var_y",
    "mean_photons",
)
CORRELATED_METRICS = (
    "U_norm",
    "nrf",
    "mean_photons",
    "mandel_q",
    "quad_diff_var",
    "quad_diff_var_seed",
)
AXES = ("lam", "mu", "eta", "phi", "psi", "chi", "one_minus_tau")
FLAG_OK = "ok"
FLAG_SINGULAR = "singular"
FLAG_OUT_OF_RANGE = "out_of_range"
FLAG_PRECISION = "precision"


@dataclass(frozen=True)
class SweepConfig:
    """One swept axis, a list of subtraction orders, and fixed scene values."""

    scheme: str  # "single" or "correlated"
    axis: str
    values: tuple
    m_list: tuple
    metrics: tuple
    lam: float = 1.0
    mu: float = 100.0
    psi: float = 0.0
    phi: float = pi / 2
    eta: float = 1.0
    chi: float = 0.0
    balanced: bool = False
    digits: int | None = None
    cutoff: int | None = None
    preset: str | None = None

    def validate(self) -> None:
        problems = []
        if self.scheme not in ("single", "correlated"):
            problems.append(f"scheme: got {self.scheme!r}, want single|correlated")
        if self.axis not in AXES:
            problems.append(f"axis: got {self.axis!r}, want one of {AXES}")
        if not self.values:
            problems.append("values: at least one axis value required")
        if not self.m_list or any(m < 0 or int(m) != m for m in self.m_list):
            problems.append("m: nonempty list of nonnegative integers required")
        allowed = SINGLE_METRICS if self.scheme == "single" else CORRELATED_METRICS
        for met in self.metrics:
            if met not in allowed:
                problems.append(f"metric: {met!r} not valid for scheme {self.scheme}")
        if not self.metrics:
            problems.append("metric: at least one metric required")
        if self.mu < 0:
            problems.append("mu: must be >= 0")
        if not 0.0 <= self.eta <= 1.0 and self.axis != "eta":
            problems.append("eta: must lie in [0, 1]")
        if self.lam < 0 and self.axis != "lam":
            problems.append("lam: must be >= 0")
        if self.digits is not None and self.digits < 15:
            problems.append("digits: must be >= 15")
        if problems:
            raise ConfigInvalid("; ".join(problems))


@dataclass(frozen=True)
class SweepRow:
    swept_value: float
    m: int
    metric: str
    value: float | None
    flag: str


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    rows: tuple
    digits_used: int | None

    def to_csv(self) -> str:
        lines = [
            f"# preset={self.config.preset or '-'}",
            f"# version=photsub-0.1.0",
            f"# scheme={self.config.scheme} axis={self.config.axis} "
            f"balanced={str(self.config.balanced).lower()}",
            f"# digits={self.digits_used if self.digits_used else '-'}",
            "swept_param,m,metric,value,flag",
        ]
        for row in self.rows:
            val = "" if row.value is None else f"{row.value:.12g}"
            lines.append(f"{row.swept_value:.12g},{row.m},{row.metric},{val},{row.flag}")
        return "\n".join(lines) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv())


# ---------------------------------------------------------------------------
# Metric evaluation
# ---------------------------------------------------------------------------


def _effective_digits(cfg: SweepConfig) -> int | None:
    env = os.environ.get("PHOTSUB_DIGITS")
    if env is not None:
        try:
            return max(15, int(env))
        except ValueError as exc:
            raise ConfigInvalid(f"PHOTSUB_DIGITS: not an integer: {env!r}") from exc
    return cfg.digits


def _scene_params(cfg: SweepConfig, axis_value: float) -> dict:
    p = {
        "lam": cfg.lam,
        "mu": cfg.mu,
        "psi": cfg.psi,
        "phi": cfg.phi,
        "eta": cfg.eta,
        "chi": cfg.chi,
    }
    if cfg.axis == "one_minus_tau":
        p["phi"] = phi_for_tau(1.0 - axis_value)
    else:
        p[cfg.axis] = axis_value
    return p


def _single_metric(metric: str, m: int, p: dict, cfg: SweepConfig, digits) -> float:
    lam = p["lam"]
    if cfg.balanced and m > 0:
        lam = balance_energy(lam, m, "single")
    spec = PassvSpec(lam, m, p["chi"])
    if metric == "mean_photons":
        return states.passv_mean_photons(lam, m)
    if metric == "snl":
        n_tot = p["mu"] + states.passv_mean_photons(lam, m)
        if p["eta"] * n_tot <= 0:
            raise ZeroMeanPhoton("shot-noise reference undefined for a dark input")
        return 1.0 / sqrt(p["eta"] * n_tot)
    if metric == "qfi_classical":
        return 2.0 * (p["mu"] + states.passv_mean_photons(lam, m))
    if metric == "var_y":
        table = moments.passv_moment_table(lam, m, chi=p["chi"])
        if p["eta"] < 1.0:
            table = moments.apply_loss(table, p["eta"])
        return moments.quadrature_variance(table, pi / 2)
    scene = SingleMziConfig(spec, mu=p["mu"], phi=p["phi"], psi=p["psi"], eta=p["eta"])
    if metric == "U":
        return metrology.single_phase_uncertainty(scene)
    if metric == "qfi":
        return metrology.qfi(scene)
    if metric == "crb":
        return metrology.cramer_rao_bound(metrology.qfi(scene))
    raise ConfigInvalid(f"metric: unknown single-scheme metric {metric!r}")


def _correlated_metric(metric: str, m: int, p: dict, cfg: SweepConfig, digits) -> float:
    lam = p["lam"]
    if cfg.balanced and m > 0:
        lam = balance_energy(lam, m, "two_mode")
    spec = SpatsvSpec(lam, m, p["chi"])
    if metric == "mean_photons":
        return states.spatsv_mean_photons(lam, m)
    if metric == "mandel_q":
        state = states.spatsv(spec, cutoff=cfg.cutoff)
        table = moments.marginal_table(state, max_order=4)
        if p["eta"] < 1.0:
            table = moments.apply_loss(table, p["eta"])
        return moments.mandel_q(table)
    if metric == "quad_diff_var":
        state = states.spatsv(spec, cutoff=cfg.cutoff)
        table = moments.table_from_state(state, max_order=2)
        return moments.quadrature_difference_variance(table, p["chi"])
    if metric == "quad_diff_var_seed":
        seed = states.spatsv_seed(spec)
        table = moments.table_from_state(seed, max_order=2)
        return moments.quadrature_difference_variance(table, p["chi"])
    scene = CorrelatedConfig(spec, mu=p["mu"], phi=p["phi"], psi=p["psi"], eta=p["eta"])
    if metric == "U_norm":
        return metrology.correlated_uncertainty(scene, dps=digits)
    if metric == "nrf":
        return metrology.nrf(scene, dps=digits)
    raise ConfigInvalid(f"metric: unknown correlated-scheme metric {metric!r}")


_FLAG_FOR_ERROR = (
    (Singular, FLAG_SINGULAR),
    (PrecisionInsufficient, FLAG_PRECISION),
    ((OutOfRange, ZeroMeanPhoton, NullState), FLAG_OUT_OF_RANGE),
)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate every (axis value, m, metric) point; errors become flagged rows."""
    cfg.validate()
    digits = _effective_digits(cfg)
    evaluate = _single_metric if cfg.scheme == "single" else _correlated_metric
    rows = []
    for value in cfg.values:
        p = _scene_params(cfg, value)
        for m in cfg.m_list:
            for metric in cfg.metrics:
                flag, result = FLAG_OK, None
                try:
                    result = evaluate(metric, m, p, cfg, digits)
                except PhotsubError as exc:
                    for kinds, name in _FLAG_FOR_ERROR:
                        if isinstance(exc, kinds):
                            flag = name
                            break
                    else:
                        raise
                rows.append(SweepRow(float(value), int(m), metric, result, flag))
    return SweepResult(cfg, tuple(rows), digits)


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------


def _log_grid(lo: float, hi: float, n: int) -> tuple:
    import numpy as np

    return tuple(float(x) for x in np.logspace(np.log10(lo), np.log10(hi), n))


_LAM_GRID = _log_grid(0.05, 100.0, 25)
_PHI_GRID = _log_grid(1e-8, 1e-3, 21)
_ETA_GRID = tuple(0.5 + 0.025 * i for i in range(21))

PRESETS: dict[str, SweepConfig] = {
    # Quadrature noise and single-interferometer uncertainty vs energy.
    "fig1a": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("var_y",), mu=100.0, eta=0.98, psi=0.0, preset="fig1a",
    ),
    "fig1b": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("U", "snl"), mu=100.0, eta=0.98, psi=0.0, phi=pi / 2,
        preset="fig1b",
    ),
    "fig1c": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("U", "snl"), mu=100.0, eta=0.98, psi=0.0, phi=pi / 2,
        balanced=True, preset="fig1c",
    ),
    # Off-optimal working point; the exact phase in the source figure is
    # ambiguous, so phi defaults to pi/2 - 1 and remains a free parameter.
    "fig_anyangle": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("U", "snl"), mu=10000.0, eta=0.98, psi=0.0, phi=pi / 2 - 1.0,
        balanced=True, preset="fig_anyangle",
    ),
    # Quantum Fisher information vs energy.
    "fig3a": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("qfi", "qfi_classical"), mu=100.0, psi=0.0, preset="fig3a",
    ),
    "fig3b": SweepConfig(
        scheme="single", axis="lam", values=_LAM_GRID, m_list=(0, 1, 2, 3, 4),
        metrics=("qfi", "qfi_classical"), mu=100.0, psi=0.0, balanced=True,
        preset="fig3b",
    ),
    # Two-mode quadrature-difference squeezing: seeds and subtracted states.
    "fig5a": SweepConfig(
        scheme="correlated", axis="lam", values=_log_grid(0.01, 10.0, 25),
        m_list=(0, 1, 2, 3), metrics=("quad_diff_var_seed",), preset="fig5a",
    ),
    "fig5b": SweepConfig(
        scheme="correlated", axis="lam", values=_log_grid(0.01, 10.0, 25),
        m_list=(0, 1, 2, 3), metrics=("quad_diff_var",), preset="fig5b",
    ),
    # Mandel Q of the thinned marginal.
    "fig_mandel": SweepConfig(
        scheme="correlated", axis="lam", values=_log_grid(0.01, 10.0, 25),
        m_list=(0, 1, 2, 3), metrics=("mandel_q",), eta=0.98, preset="fig_mandel",
    ),
    # Noise reduction factor vs the fringe-position loss 1 - tau.
    "fig8": SweepConfig(
        scheme="correlated", axis="one_minus_tau", values=_log_grid(1e-5, 0.99, 25),
        m_list=(0, 1, 2), metrics=("nrf",), lam=0.05, mu=1e6, psi=pi / 2,
        eta=1.0, preset="fig8",
    ),
    # Normalized covariance uncertainty vs the working phase.
    "fig9a": SweepConfig(
        scheme="correlated", axis="phi", values=_PHI_GRID, m_list=(0, 1, 2, 3),
        metrics=("U_norm",), lam=2.0, mu=1e12, psi=pi / 2, eta=0.98,
        preset="fig9a",
    ),
    "fig9b": SweepConfig(
        scheme="correlated", axis="phi", values=_PHI_GRID, m_list=(0, 1, 2, 3),
        metrics=("U_norm",), lam=0.05, mu=1e12, psi=pi / 2, eta=0.98,
        preset="fig9b",
    ),
    "fig9c": SweepConfig(
        scheme="correlated", axis="phi", values=_PHI_GRID, m_list=(0, 1, 2, 3),
        metrics=("U_norm",), lam=2.0, mu=1e12, psi=pi / 2, eta=0.96,
        balanced=True, preset="fig9c",
    ),
    # Normalized covariance uncertainty vs detection efficiency.
    "fig10a": SweepConfig(
        scheme="correlated", axis="eta", values=_ETA_GRID, m_list=(0, 1, 2, 3),
        metrics=("U_norm",), lam=2.0, mu=1e12, phi=1e-8, psi=pi / 2,
        preset="fig10a",
    ),
    "fig10b": SweepConfig(
        scheme="correlated", axis="eta", values=_ETA_GRID, m_list=(0, 1, 2, 3),
        metrics=("U_norm",), lam=2.0, mu=1e12, phi=1e-8, psi=pi / 2,
        balanced=True, preset="fig10b",
    ),
}

JOINT_DISTRIBUTION_PRESET = "fig6"


def run_preset(name: str) -> SweepResult:
    """Evaluate a registered figure preset."""
    if name == JOINT_DISTRIBUTION_PRESET:
        return _joint_distribution_preset()
    try:
        cfg = PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS) + [JOINT_DISTRIBUTION_PRESET])
        raise UnknownPreset(f"no preset {name!r}; known presets: {known}") from None
    return run_sweep(cfg)


def _joint_distribution_preset(lam: float = 0.6, n_max: int = 8) -> SweepResult:
    """Joint photon-number distribution P(j, k): axis is j, metrics are p_k<k>."""
    m_list = (0, 1, 3)
    cfg = SweepConfig(
        scheme="correlated", axis="lam", values=(lam,), m_list=m_list,
        metrics=("mean_photons",), lam=lam, preset=JOINT_DISTRIBUTION_PRESET,
    )
    rows = []
    for j in range(n_max + 1):
        for m in m_list:
            state = states.spatsv(SpatsvSpec(lam, m))
            joint = moments.joint_photon_distribution(state)
            for k in range(n_max + 1):
                p = float(joint[j, k]) if j < joint.shape[0] and k < joint.shape[1] else 0.0
                rows.append(SweepRow(float(j), m, f"p_k{k}", p, FLAG_OK))
    return SweepResult(cfg, tuple(rows), None)


# ---------------------------------------------------------------------------
# Config files
# ---------------------------------------------------------------------------

_FLOAT_KEYS = {"lam", "mu", "psi", "phi", "eta", "chi"}
_NAMED_PHASES = {"pi/2": pi / 2, "pi": pi, "pi/4": pi / 4, "0": 0.0}


def parse_config(path: str) -> dict:
    """Read a flat key = value file; '#' starts a comment, commas make lists."""
    data = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigInvalid(f"cannot read config {path!r}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigInvalid(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        data[key.strip()] = value.strip()
    return data


def _parse_float(key: str, text: str) -> float:
    if text in _NAMED_PHASES:
        return _NAMED_PHASES[text]
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigInvalid(f"{key}: not a number: {text!r}") from exc


def sweep_config_from_file(path: str) -> SweepConfig:
    data = parse_config(path)
    if "preset" in data:
        name = data["preset"]
        if name == JOINT_DISTRIBUTION_PRESET:
            raise ConfigInvalid(
                f"{JOINT_DISTRIBUTION_PRESET} is only available via the preset verb"
            )
        if name not in PRESETS:
            raise ConfigInvalid(f"preset: unknown name {name!r}")
        cfg = PRESETS[name]
        if "digits" in data:
            cfg = replace(cfg, digits=int(_parse_float("digits", data["digits"])))
        return cfg
    required = {"scheme", "axis", "values", "m", "metric"}
    missing = sorted(required - set(data))
    if missing:
        raise ConfigInvalid(f"missing keys: {', '.join(missing)}")
    kwargs = {
        "scheme": data["scheme"],
        "axis": data["axis"],
        "values": tuple(
            _parse_float("values", v) for v in data["values"].split(",") if v.strip()
        ),
        "m_list": tuple(
            int(_parse_float("m", v)) for v in data["m"].split(",") if v.strip()
        ),
        "metrics": tuple(v.strip() for v in data["metric"].split(",") if v.strip()),
    }
    for key in _FLOAT_KEYS:
        if key in data:
            kwargs[key] = _parse_float(key, data[key])
    if "balanced" in data:
        text = data["balanced"].lower()
        if text not in ("true", "false"):
            raise ConfigInvalid(f"balanced: expected true|false, got {data['balanced']!r}")
        kwargs["balanced"] = text == "true"
    for key in ("digits", "cutoff"):
        if key in data:
            kwargs[key] = int(_parse_float(key, data[key]))
    cfg = SweepConfig(**kwargs)
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# Oracle comparison
# ---------------------------------------------------------------------------

ORACLE_TOLERANCE = 1e-8
_ORACLE_MU_BOUND = 10.0


@dataclass(frozen=True)
class OracleComparison:
    scheme: str
    entries: tuple  # (label, engine value, oracle value, relative error)

    @property
    def worst(self) -> float:
        return max((e[3] for e in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return self.worst <= ORACLE_TOLERANCE

    def report(self) -> str:
        lines = [f"{'moment':<14}{'engine':>22}{'oracle':>22}{'rel err':>12}"]
        for label, eng, ora, err in self.entries:
            lines.append(f"{label:<14}{eng:>22.12e}{ora:>22.12e}{err:>12.2e}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"{verdict}: worst relative error {self.worst:.2e} "
            f"(tolerance {ORACLE_TOLERANCE:.0e})"
        )
        return "\n".join(lines)


def _rel_err(a: float, b: float) -> float:
    scale = max(abs(a), abs(b), 1e-12)
    return abs(a - b) / scale


def oracle_compare(
    scheme: str,
    lam: float,
    m: int,
    mu: float,
    phi: float,
    psi: float = 0.0,
    eta: float = 1.0,
    loss: str = "thinning",
    quantum_cutoff: int | None = None,
) -> OracleComparison:
    """Compare engine read-out moments against the brute-force Fock oracle."""
    if mu > _ORACLE_MU_BOUND:
        raise MemoryBoundExceeded(
            f"oracle limited to mu <= {_ORACLE_MU_BOUND}, got {mu}"
        )
    entries = []
    if scheme == "single":
        cfg = SingleMziConfig(PassvSpec(lam, m), mu=mu, phi=phi, psi=psi, eta=eta)
        engine = metrology.single_readout_moments(cfg)
        q = states.passv(PassvSpec(lam, m), cutoff=quantum_cutoff)
        scene = fock.OracleScene(
            kind="single", quantum=q, mu=mu, psi=psi, phi1=phi, eta=eta, loss=loss
        )
        oracle = fock.oracle_interferometer(scene).moments
    elif scheme == "correlated":
        cfg = CorrelatedConfig(SpatsvSpec(lam, m), mu=mu, phi=phi, psi=psi, eta=eta)
        engine = metrology.correlated_readout_moments(cfg)
        q = states.spatsv(SpatsvSpec(lam, m), cutoff=quantum_cutoff)
        scene = fock.OracleScene(
            kind="correlated", quantum=q, mu=mu, psi=psi, phi1=phi, phi2=phi,
            eta=eta, loss=loss,
        )
        oracle = fock.oracle_interferometer(scene).moments
    else:
        raise ConfigInvalid(f"scheme: got {scheme!r}, want single|correlated")
    for key in sorted(engine):
        if key not in oracle:
            continue
        eng, ora = float(engine[key]), float(oracle[key])
        entries.append((f"N^{key[0]} N^{key[1]}", eng, ora, _rel_err(eng, ora)))
    return OracleComparison(scheme, tuple(entries))


def oracle_compare_from_file(path: str) -> OracleComparison:
    data = parse_config(path)
    if "scheme" not in data:
        raise ConfigInvalid("missing keys: scheme")
    kwargs = {"scheme": data["scheme"]}
    for key, default in (
        ("lam", 0.3), ("m", 1), ("mu", 2.0), ("phi", 0.7), ("psi", 0.0), ("eta", 1.0),
    ):
        kwargs[key] = _parse_float(key, data[key]) if key in data else default
    kwargs["m"] = int(kwargs["m"])
    if "loss" in data:
        if data["loss"] not in ("thinning", "ancilla"):
            raise ConfigInvalid(f"loss: got {data['loss']!r}, want thinning|ancilla")
        kwargs["loss"] = data["loss"]
    if "cutoff" in data:
        kwargs["quantum_cutoff"] = int(_parse_float("cutoff", data["cutoff"]))
    return oracle_compare(**kwargs)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="photsub",
        description="Phase-estimation sweeps with photon-subtracted squeezed light",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    p_preset = sub.add_parser("preset", help="run a named figure preset")
    p_preset.add_argument("name")
    p_preset.add_argument("--out", required=True, help="output CSV path")
    p_sweep = sub.add_parser("sweep", help="run a sweep described by a config file")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", help="output CSV path (default: stdout)")
    p_cmp = sub.add_parser(
        "oracle-compare", help="check the analytic engine against the Fock oracle"
    )
    p_cmp.add_argument("--config", required=True)
    args = parser.parse_args(argv)

    try:
        if args.verb == "preset":
            result = run_preset(args.name)
            result.write(args.out)
            print(f"wrote {len(result.rows)} rows to {args.out}")
            return EXIT_OK
        if args.verb == "sweep":
            result = run_sweep(sweep_config_from_file(args.config))
            if args.out:
                result.write(args.out)
                print(f"wrote {len(result.rows)} rows to {args.out}")
            else:
                sys.stdout.write(result.to_csv())
            return EXIT_OK
        comparison = oracle_compare_from_file(args.config)
        print(comparison.report())
        return EXIT_OK if comparison.passed else EXIT_NUMERICAL
    except (ConfigInvalid, UnknownPreset) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PrecisionInsufficient as exc:
        print(f"numerical contract failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except PhotsubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
