"""Parameter grids, row evaluation and CSV output.

A :class:`SweepConfig` names a channel, the parameters held fixed and the
linear grids being scanned. :func:`run_sweep` evaluates every grid point
(closed forms next to the numeric QFI of the closed-form channel output)
and returns rows in lexicographic grid order, whatever the worker count.

Channel coefficients are bound here. For ``sgad`` and ``gad`` they come
from the bath through :func:`~hawking_qfi.channels.thermal_coeffs`
unless ``lambda`` (and for ``sgad`` also ``mu``) is given directly;
``ad`` always takes ``lambda`` directly. The Hawking factor in the
closed forms uses ``w/T = omega / T_H``.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .channels import ChannelCoeffs, SgadParams, thermal_coeffs
from .closed_forms import PHI_FORMS, REGROUPED, THETA_FORMS, VARIANTS, ClosedFormInput
from .errors import (
    DegenerateSpectrumError,
    GaugeError,
    NotHermitianError,
    ParameterDomainError,
)
from .families import DEFAULT_ASSIGNMENT, literal_family
from .qfi import DEFAULT_EPS, DEFAULT_STEP, qfi_sld, qfi_spectral
from .state import ASSIGNMENTS

CHANNELS = ("sgad", "gad", "ad")
BATH_PARAMETERS = ("theta", "phi", "T_C", "T_H", "r", "Phi", "Q", "gamma0", "omega")
COEFF_PARAMETERS = ("lambda", "mu")
PARAMETERS = BATH_PARAMETERS + COEFF_PARAMETERS
DEFAULTS = {
    "theta": math.pi / 4, "phi": 0.0, "T_C": 1.0, "T_H": 1.0, "r": 0.0,
    "Phi": 0.0, "Q": 0.5, "gamma0": 1.0, "omega": 1.0,
}
HEADER = (
    "channel", "theta", "phi", "T_C", "T_H", "r", "Phi", "Q", "gamma0", "omega",
    "lambda", "mu", "v", "qfi_theta_closed", "qfi_theta_numeric",
    "qfi_phi_closed", "qfi_phi_numeric", "status", "note",
)
METHODS = ("sld", "spectral")

OK = "ok"
REJECTED = "rejected_unphysical"
DEGENERATE = "degenerate_skipped"


class ConfigError(ValueError):
    """Invalid sweep configuration; the message names the parameter."""


def fmt(x: float) -> str:
    return format(float(x), ".12g")


@dataclass(frozen=True)
class Grid:
    name: str
    start: float
    stop: float
    count: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


_POSITIVE = ("T_C", "T_H", "gamma0", "omega")
_UNIT = ("Q", "lambda", "mu")


def _check_value(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ConfigError(f"{name} must be finite, got {value}")
    if name in _POSITIVE and not value > 0:
        raise ConfigError(f"{name} must be > 0, got {value}")
    if name == "r" and value < 0:
        raise ConfigError(f"r must be >= 0, got {value}")
    if name in _UNIT and not 0.0 <= value <= 1.0:
        raise ConfigError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class SweepConfig:
    channel: str = "sgad"
    vary: tuple = ()
    fixed: dict = field(default_factory=dict)
    fd_step: float = DEFAULT_STEP
    support_eps: float = DEFAULT_EPS
    output_path: str | None = None
    method: str = "sld"
    assignment: str = DEFAULT_ASSIGNMENT
    workers: int = 1

    def validate(self) -> "SweepConfig":
        if self.channel not in CHANNELS:
            raise ConfigError(f"channel must be one of {', '.join(CHANNELS)}, got {self.channel!r}")
        if self.method not in METHODS:
            raise ConfigError(f"method must be one of {', '.join(METHODS)}, got {self.method!r}")
        if self.assignment not in ASSIGNMENTS:
            raise ConfigError(f"assignment must be one of {', '.join(ASSIGNMENTS)}, got {self.assignment!r}")
        if not self.fd_step > 0:
            raise ConfigError(f"fd-step must be > 0, got {self.fd_step}")
        if not self.support_eps > 0:
            raise ConfigError(f"support-eps must be > 0, got {self.support_eps}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")

        seen = set()
        for g in self.vary:
            if g.name not in PARAMETERS:
                raise ConfigError(f"unknown parameter {g.name!r}; expected one of {', '.join(PARAMETERS)}")
            if g.name in seen:
                raise ConfigError(f"parameter {g.name} is varied twice")
            seen.add(g.name)
            if g.count < 2:
                raise ConfigError(f"grid for {g.name} needs count >= 2, got {g.count}")
            _check_value(g.name, g.start)
            _check_value(g.name, g.stop)
        for name, value in self.fixed.items():
            if name not in PARAMETERS:
                raise ConfigError(f"unknown parameter {name!r}; expected one of {', '.join(PARAMETERS)}")
            if name in seen:
                raise ConfigError(f"parameter {name} is both fixed and varied")
            _check_value(name, value)

        given = seen | set(self.fixed)
        if self.channel == "ad":
            if "lambda" not in given:
                raise ConfigError("channel ad takes lambda directly; set or vary lambda in [0, 1]")
            if "mu" in given:
                raise ConfigError("mu is not a parameter of channel ad")
        elif self.channel == "gad":
            if "mu" in given:
                raise ConfigError("mu is zero for channel gad and cannot be set")
            for name in ("r", "Phi"):
                if name in seen or self.fixed.get(name, 0.0) != 0.0:
                    raise ConfigError(f"channel gad has no squeezing; {name} must be 0")
        elif ("lambda" in given) != ("mu" in given):
            raise ConfigError("channel sgad takes lambda and mu together or neither")
        if self.channel != "ad" and "lambda" not in given:
            qs = [self.fixed.get("Q", DEFAULTS["Q"])]
            qs += [v for g in self.vary if g.name == "Q" for v in (g.start, g.stop)]
            if any(not 0.0 < q < 1.0 for q in qs):
                raise ConfigError("Q must lie in (0, 1) when lambda is bound from the bath")
        return self

    def grid(self):
        """Parameter dicts in lexicographic order (last grid fastest)."""
        base = {**DEFAULTS, **self.fixed}
        axes = [g.values() for g in self.vary]
        names = [g.name for g in self.vary]
        for combo in itertools.product(*axes):
            point = dict(base)
            point.update(zip(names, (float(v) for v in combo)))
            yield point

    @property
    def size(self) -> int:
        return math.prod(g.count for g in self.vary)


@dataclass(frozen=True)
class SweepRow:
    channel: str
    params: dict
    lam: float
    mu: float
    v: float
    qfi_theta_closed: float
    qfi_theta_numeric: float
    qfi_phi_closed: float
    qfi_phi_numeric: float
    status: str
    note: str = ""

    def cells(self) -> list[str]:
        p = self.params
        out = [self.channel] + [fmt(p[k]) for k in BATH_PARAMETERS]
        out += [fmt(x) for x in (self.lam, self.mu, self.v, self.qfi_theta_closed,
                                 self.qfi_theta_numeric, self.qfi_phi_closed, self.qfi_phi_numeric)]
        return out + [self.status, self.note]


def bind_coefficients(channel: str, point: dict) -> ChannelCoeffs:
    """Channel coefficients at one grid point.

    Raises :class:`UnphysicalError` (or its parent) when the bath
    parameters give a coefficient outside [0, 1].
    """
    if channel == "ad":
        return ChannelCoeffs.ad(point["lambda"])
    Q = point["Q"]
    if channel == "gad":
        if "lambda" in point:
            return ChannelCoeffs.gad(Q, point["lambda"])
        tc = thermal_coeffs(SgadParams(Q, 0.0, 0.0, point["gamma0"], point["omega"], point["T_C"]))
        return ChannelCoeffs(tc.lam, 0.0, Q, 0.0, tc.lam)
    if "lambda" in point:
        return ChannelCoeffs(point["lambda"], point["mu"], Q, point["Phi"])
    p = SgadParams(Q, point["r"], point["Phi"], point["gamma0"], point["omega"], point["T_C"])
    return ChannelCoeffs.from_params(p)


def _closed(channel: str, inp: ClosedFormInput, variant: str) -> tuple[float, float]:
    if channel == "sgad":
        theta = THETA_FORMS["sgad"](inp, variant=variant)
    else:
        theta = THETA_FORMS[channel](inp)
    return float(theta), float(PHI_FORMS[channel](inp))


def _numeric(cfg: SweepConfig, point: dict, c: ChannelCoeffs, ratio: float) -> tuple[float, float]:
    theta, phi = point["theta"], point["phi"]
    out = []
    for name, x in (("theta", theta), ("phi", phi)):
        fam = literal_family(name, theta, phi, ratio, c, cfg.assignment)
        if cfg.method == "spectral":
            res = qfi_spectral(fam, x, cfg.fd_step, cfg.support_eps)
        else:
            res = qfi_sld(fam, x, cfg.fd_step, cfg.support_eps, continuous=True)
        out.append(res.value)
    return out[0], out[1]


def evaluate_point(cfg: SweepConfig, point: dict, variant: str = REGROUPED) -> SweepRow:
    """One row. Numeric failures other than degeneracy propagate."""
    nan = float("nan")
    shown = dict(point)
    if cfg.channel == "ad":
        shown["Q"] = 1.0
    try:
        c = bind_coefficients(cfg.channel, point)
    except ParameterDomainError as exc:
        return SweepRow(cfg.channel, shown, nan, nan, nan, nan, nan, nan, nan, REJECTED,
                        f"{exc.term}: {exc}")
    ratio = point["omega"] / point["T_H"]
    inp = ClosedFormInput(point["theta"], point["phi"], ratio, c.lam, c.mu, c.Q, c.Phi)
    try:
        closed = _closed(cfg.channel, inp, variant)
    except NotHermitianError as exc:
        return SweepRow(cfg.channel, shown, c.lam, c.mu, c.v, nan, nan, nan, nan, REJECTED,
                        f"Phi: {exc}")
    except ParameterDomainError as exc:
        closed = (nan, nan)
        note = f"{exc.term}: {exc}"
    else:
        note = ""
    try:
        numeric = _numeric(cfg, point, c, ratio)
    except (DegenerateSpectrumError, GaugeError) as exc:
        return SweepRow(cfg.channel, shown, c.lam, c.mu, c.v, closed[0], nan, closed[1], nan,
                        DEGENERATE, str(exc))
    return SweepRow(cfg.channel, shown, c.lam, c.mu, c.v, closed[0], numeric[0], closed[1],
                    numeric[1], OK, note)


def _evaluate_job(args):
    cfg, point, variant = args
    return evaluate_point(cfg, point, variant)


def run_sweep(cfg: SweepConfig, variant: str = REGROUPED) -> list[SweepRow]:
    cfg.validate()
    if variant not in VARIANTS:
        raise ConfigError(f"expression-variant must be one of {', '.join(VARIANTS)}, got {variant!r}")
    jobs = [(cfg, point, variant) for point in cfg.grid()]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            # map yields in submission order, so the CSV order is fixed
            return list(pool.map(_evaluate_job, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    return [_evaluate_job(j) for j in jobs]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for row in rows:
        w.writerow(row.cells())
    return buf.getvalue()


def write_csv(rows, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(rows_to_csv(rows))


def with_fixed(cfg: SweepConfig, **values) -> SweepConfig:
    return replace(cfg, fixed={**cfg.fixed, **values})

