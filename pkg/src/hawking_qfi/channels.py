"""Amplitude-damping family of single-qubit channels.

Three Kraus families are provided: amplitude damping (AD), generalized
amplitude damping (GAD, finite-temperature bath) and squeezed GAD (SGAD,
squeezed thermal bath). :func:`thermal_coeffs` maps bath parameters to
the channel coefficients ``(lambda, mu, v)``; :func:`apply_channel` is the
trace-preserving simulation path and :func:`paper_literal_sgad_rho` builds
the closed-form channel output used to cross-check the QFI formulas.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, NotHermitianError, ParameterDomainError, UnphysicalError
from .linalg import HERMITIAN_TOL, hermitian_defect, kron_all, qubit_count
from .state import DilatedState

INDEPENDENT = "independent"
CORRELATED = "correlated"


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParameterDomainError(f"{name} must lie in [0, 1], got {value}", term=name)
    return value


@dataclass(frozen=True)
class SgadParams:
    """Squeezed thermal bath seen by one qubit.

    ``gamma0`` is the damping exposure with the evolution time folded in.
    ``channel_temp`` is the bath temperature entering the thermal
    occupation at frequency ``omega``.
    """

    bath_coupling_Q: float
    squeezing_r: float = 0.0
    squeezing_angle_Phi: float = 0.0
    gamma0: float = 1.0
    omega: float = 1.0
    channel_temp: float = 1.0

    def __post_init__(self):
        _check_unit("Q", self.bath_coupling_Q)
        if not self.squeezing_r >= 0:
            raise ParameterDomainError(f"r must be >= 0, got {self.squeezing_r}", term="r")
        for name, value in (("gamma0", self.gamma0), ("omega", self.omega), ("T_C", self.channel_temp)):
            if not value > 0:
                raise ParameterDomainError(f"{name} must be positive, got {value}", term=name)


@dataclass(frozen=True)
class ThermalCoeffs:
    n_th: float
    big_n: float
    a_coeff: float
    mu: float
    v: float
    lam: float


def _log_sinh(x: float) -> float:
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


def thermal_coeffs(p: SgadParams, check_physical: bool = True) -> ThermalCoeffs:
    """Channel coefficients ``(mu, v, lambda)`` of a squeezed thermal bath.

    Raises :class:`ParameterDomainError` for ``Q`` in {0, 1} or ``N = 0``,
    where the expressions divide by zero, and :class:`UnphysicalError` when
    a coefficient leaves [0, 1] (unless ``check_physical`` is false).
    """
    Q, r, g = p.bath_coupling_Q, p.squeezing_r, p.gamma0
    if Q >= 1.0:
        raise ParameterDomainError("mu and v divide by 1 - Q; Q = 1 is outside their domain", term="1-Q")
    if Q <= 0.0:
        raise ParameterDomainError("lambda divides by Q; Q = 0 is outside its domain", term="Q")

    x = p.omega / p.channel_temp
    n_th = 1.0 / math.expm1(x) if x < 700.0 else 0.0
    ch, sh = math.cosh(r), math.sinh(r)
    big_n = n_th * (ch * ch + sh * sh) + sh * sh
    if big_n <= 0.0:
        raise ParameterDomainError("mu divides by N; N = 0 (r = 0 and T_C -> 0)", term="N")
    a = math.sinh(2.0 * r) * (2.0 * n_th + 1.0)

    rate = g * (2.0 * big_n + 1.0)
    decay = math.exp(-rate)
    if a == 0.0:
        mu = 0.0
    else:
        # sinh^2(ga/2) / sinh^2(rate/2) * e^{-rate/2}, in logs to survive large rates
        log_ratio = 2.0 * (_log_sinh(g * a / 2.0) - _log_sinh(rate / 2.0)) - rate / 2.0
        mu = (2.0 * big_n + 1.0) / (2.0 * big_n * (1.0 - Q)) * math.exp(log_ratio)
    v = big_n / ((1.0 - Q) * (2.0 * big_n + 1.0)) * (1.0 - decay)
    lam = (1.0 - (1.0 - Q) * (mu + v) - decay) / Q

    coeffs = ThermalCoeffs(n_th, big_n, a, mu, v, lam)
    if check_physical:
        for name, value in (("mu", mu), ("v", v), ("lambda", lam)):
            if not 0.0 <= value <= 1.0:
                raise UnphysicalError(f"{name} = {value:.6g} lies outside [0, 1]", term=name)
    return coeffs


@dataclass(frozen=True)
class KrausSet:
    operators: tuple
    label: str

    def completeness(self) -> np.ndarray:
        return sum(e.conj().T @ e for e in self.operators)

    def __len__(self):
        return len(self.operators)

    def __iter__(self):
        return iter(self.operators)


def _ops(*mats) -> tuple:
    out = []
    for m in mats:
        arr = np.array(m, dtype=complex)
        arr.setflags(write=False)
        out.append(arr)
    return tuple(out)


def kraus_sgad_from_coeffs(Q: float, lam: float, mu: float, v: float, Phi: float = 0.0) -> KrausSet:
    Q, lam, mu, v = (_check_unit(n, x) for n, x in (("Q", Q), ("lambda", lam), ("mu", mu), ("v", v)))
    sq, sr = math.sqrt(Q), math.sqrt(1.0 - Q)
    e0 = sq * np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - lam)]])
    e1 = sq * np.array([[0.0, math.sqrt(lam)], [0.0, 0.0]])
    e2 = sr * np.array([[math.sqrt(1.0 - v), 0.0], [0.0, math.sqrt(1.0 - mu)]])
    e3 = sr * np.array([[0.0, math.sqrt(mu) * np.exp(1j * Phi)], [math.sqrt(v), 0.0]])
    return KrausSet(_ops(e0, e1, e2, e3), "SGAD")


def kraus_sgad(p: SgadParams) -> KrausSet:
    tc = thermal_coeffs(p)
    return kraus_sgad_from_coeffs(p.bath_coupling_Q, tc.lam, tc.mu, tc.v, p.squeezing_angle_Phi)


def kraus_gad(Q: float, lambda_G: float) -> KrausSet:
    Q, lam = _check_unit("Q", Q), _check_unit("lambda", lambda_G)
    sq, sr = math.sqrt(Q), math.sqrt(1.0 - Q)
    e0 = sq * np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - lam)]])
    e1 = sq * np.array([[0.0, math.sqrt(lam)], [0.0, 0.0]])
    e2 = sr * np.array([[math.sqrt(1.0 - lam), 0.0], [0.0, 1.0]])
    e3 = sr * np.array([[0.0, 0.0], [math.sqrt(lam), 0.0]])
    return KrausSet(_ops(e0, e1, e2, e3), "GAD")


def kraus_ad(lambda_A: float) -> KrausSet:
    lam = _check_unit("lambda", lambda_A)
    e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - lam)]])
    e1 = np.array([[0.0, math.sqrt(lam)], [0.0, 0.0]])
    return KrausSet(_ops(e0, e1), "AD")


def apply_channel(rho, ks: KrausSet, targets, index_mode: str = INDEPENDENT) -> np.ndarray:
    """Act with ``ks`` on the qubits ``targets`` of ``rho``.

    ``independent`` sums over every tuple of Kraus indices (one channel
    per target, trace preserving). ``correlated`` uses one shared index on
    all targets, ``sum_i (E_i x E_i) rho (E_i x E_i)^dagger``.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {rho.shape}")
    n = qubit_count(rho.shape[0])
    targets = [int(t) for t in targets]
    if len(set(targets)) != len(targets):
        raise DimensionError(f"target qubits must be distinct, got {targets}")
    for t in targets:
        if not 0 <= t < n:
            raise DimensionError(f"target qubit {t} out of range for {n} qubits")

    if index_mode == INDEPENDENT:
        combos = itertools.product(ks.operators, repeat=len(targets))
    elif index_mode == CORRELATED:
        combos = ((e,) * len(targets) for e in ks.operators)
    else:
        raise ValueError(f"unknown index_mode {index_mode!r}")

    out = np.zeros_like(rho)
    for ops in combos:
        placed = dict(zip(targets, ops))
        full = kron_all(placed.get(k, np.eye(2)) for k in range(n))
        out += full @ rho @ full.conj().T
    return out


@dataclass(frozen=True)
class ChannelCoeffs:
    """Coefficients feeding the closed-form channel output.

    ``v`` does not enter that matrix; it is carried for reporting.
    """

    lam: float
    mu: float = 0.0
    Q: float = 1.0
    Phi: float = 0.0
    v: float = field(default=float("nan"), compare=False)

    def __post_init__(self):
        for name in ("lam", "mu", "Q"):
            _check_unit(name, getattr(self, name))

    @classmethod
    def from_params(cls, p: SgadParams) -> "ChannelCoeffs":
        tc = thermal_coeffs(p)
        return cls(tc.lam, tc.mu, p.bath_coupling_Q, p.squeezing_angle_Phi, tc.v)

    @classmethod
    def gad(cls, Q: float, lam: float) -> "ChannelCoeffs":
        return cls(lam, 0.0, Q, 0.0, lam)

    @classmethod
    def ad(cls, lam: float) -> "ChannelCoeffs":
        return cls(lam, 0.0, 1.0, 0.0, lam)


def paper_literal_sgad_rho(state: DilatedState, p, literal_complex: bool = False) -> np.ndarray:
    """Channel-acted matrix of the accessible state, term by term.

    ``p`` is a :class:`SgadParams` (coefficients from the bath) or a
    :class:`ChannelCoeffs`. The result is not renormalised: its trace is
    the sum of the three nonzero eigenvalues and is generally below one.

    The |001> population carries ``e^{2 i Phi}``, so for ``Phi`` outside
    {0, pi} the matrix is not Hermitian and is refused unless
    ``literal_complex`` is set.
    """
    c = ChannelCoeffs.from_params(p) if isinstance(p, SgadParams) else p
    lam, mu, Q = c.lam, c.mu, c.Q
    a, b = state.coeff_A, state.coeff_B
    a2, b2, f2 = abs(a) ** 2, abs(b) ** 2, abs(state.coeff_F) ** 2
    lb, mb, qb = 1.0 - lam, 1.0 - mu, 1.0 - Q
    squeeze = np.exp(2j * c.Phi)

    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 7] = a * np.conj(b) * Q * Q * lb
    rho[7, 0] = np.conj(a) * b * Q * Q * lb
    rho[7, 7] = b2 * Q * Q * lb * lb
    rho[1, 1] = b2 * lam * mu * Q * squeeze * qb + b2 * lam * lam * Q * Q + f2 * Q * Q
    rho[3, 3] = b2 * lam * Q * mb * qb
    rho[0, 0] = a2 * Q * Q

    if not literal_complex:
        if abs(rho[1, 1].imag) > HERMITIAN_TOL * max(1.0, abs(rho[1, 1])):
            raise NotHermitianError(
                f"Phi = {c.Phi} puts a complex value on the |001> population; "
                "pass literal_complex=True for the unsymmetrised matrix"
            )
        rho[1, 1] = rho[1, 1].real
    return rho


def literal_trace(state: DilatedState, c: ChannelCoeffs) -> float:
    a2, b2, f2 = abs(state.coeff_A) ** 2, abs(state.coeff_B) ** 2, abs(state.coeff_F) ** 2
    lam, mu, Q = c.lam, c.mu, c.Q
    return (
        Q * (b2 * lam * mu * (1 - Q) + Q * (b2 * lam * lam + f2))
        + Q * Q * (b2 * (1 - lam) ** 2 + a2)
        + b2 * lam * Q * (1 - mu) * (1 - Q)
    )


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    return hermitian_defect(m) <= tol
