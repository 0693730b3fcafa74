"""Tripartite Dirac state with one mode split across a Schwarzschild horizon.

The qubits are ordered ``a b c1 c2``: Alice, Bob, Caleb's exterior mode
and the interior mode that is traced out. Natural units throughout
(hbar = k_B = c = G = 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError
from .linalg import partial_trace

# exp(700) is still finite in double precision; beyond it the split is frozen
KRUSKAL_OVERFLOW = 700.0


def hawking_temperature(mass: float) -> float:
    """Hawking temperature ``1 / (8 pi M)`` of a Schwarzschild black hole."""
    if not mass > 0:
        raise ParameterDomainError(f"black-hole mass must be positive, got {mass}", term="mass")
    return 1.0 / (8.0 * math.pi * mass)


@dataclass(frozen=True)
class StateParams:
    """Weight ``theta`` and phase ``phi`` of cos|000> + sin e^{i phi}|111>.

    Angles are reduced to ``theta in [0, pi)`` and ``phi in [0, 2 pi)``;
    shifting theta by pi only flips the global sign of the state.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % math.pi)
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))


@dataclass(frozen=True)
class ModeSpec:
    omega: float
    hawking_temp: float

    def __post_init__(self):
        if not self.omega > 0:
            raise ParameterDomainError(f"omega must be positive, got {self.omega}", term="omega")
        if not self.hawking_temp > 0:
            raise ParameterDomainError(
                f"Hawking temperature must be positive, got {self.hawking_temp}", term="T_H"
            )

    @property
    def ratio(self) -> float:
        return self.omega / self.hawking_temp


def kruskal_split(ratio: float) -> tuple[float, float]:
    """Kruskal-vacuum amplitudes as a function of ``omega / T``.

    Returns ``((e^{-x} + 1)^{-1/2}, (e^{x} + 1)^{-1/2})``, evaluated in
    the overflow-free form ``e^{-x} / (1 + e^{-x})`` for the second
    square. Ratios above 700 give exactly ``(1, 0)``.
    """
    x = float(ratio)
    if not x >= 0:
        raise ParameterDomainError(f"omega/T must be non-negative, got {ratio}", term="omega/T")
    if x > KRUSKAL_OVERFLOW:
        return 1.0, 0.0
    q = math.exp(-x)
    return math.sqrt(1.0 / (1.0 + q)), math.sqrt(q / (1.0 + q))


def kruskal_coefficients(mode: ModeSpec) -> tuple[float, float]:
    return kruskal_split(mode.ratio)


@dataclass(frozen=True)
class DilatedState:
    """Pure state ``A|0000> + B|1110> + F|0011>`` over ``a b c1 c2``.

    Under the ``printed`` assignment B and F are real; the ``kruskal``
    assignment puts the phase on B.
    """

    coeff_A: complex
    coeff_B: complex
    coeff_F: complex

    @property
    def amplitudes(self) -> np.ndarray:
        psi = np.zeros(16, dtype=complex)
        psi[0b0000] = self.coeff_A
        psi[0b1110] = self.coeff_B
        psi[0b0011] = self.coeff_F
        return psi

    @property
    def norm_sq(self) -> float:
        return abs(self.coeff_A) ** 2 + abs(self.coeff_B) ** 2 + abs(self.coeff_F) ** 2


PRINTED = "printed"
KRUSKAL = "kruskal"
ASSIGNMENTS = (PRINTED, KRUSKAL)


def dilated_coefficients(theta: float, phi: float, ratio: float,
                         assignment: str = PRINTED) -> tuple[complex, complex, complex]:
    """The triple (A, B, F) without building the dataclasses.

    ``printed``: ``A = sin e^{i phi}``, ``B = cos c0``, ``F = cos c1``, so
    the sin(theta) branch sits on |0000> and the cos(theta) amplitude is
    split by the Kruskal map.

    ``kruskal``: the vacuum map applied to the |0>_K branch of
    ``cos|000> + sin e^{i phi}|111>``, giving ``A = cos c0``,
    ``B = sin e^{i phi}``, ``F = cos c1``. Same three basis states.
    """
    c0, c1 = kruskal_split(ratio)
    c, s = math.cos(theta), math.sin(theta)
    phase = complex(math.cos(phi), math.sin(phi))
    if assignment == PRINTED:
        return s * phase, complex(c * c0), complex(c * c1)
    if assignment == KRUSKAL:
        return complex(c * c0), s * phase, complex(c * c1)
    raise ValueError(f"assignment must be one of {ASSIGNMENTS}, got {assignment!r}")


def build_dilated_state(sp: StateParams, mode: ModeSpec, assignment: str = PRINTED) -> DilatedState:
    return DilatedState(*dilated_coefficients(sp.theta, sp.phi, mode.ratio, assignment))


def accessible_density_matrix(state: DilatedState) -> np.ndarray:
    """Density matrix of ``a b c1`` after tracing out the interior mode.

    Built entry by entry rather than by partial trace; the coherence
    between |000> and |111> is ``A conj(B)`` (``A B`` for real B).
    """
    a, b, f = state.coeff_A, state.coeff_B, state.coeff_F
    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = abs(a) ** 2
    rho[7, 7] = abs(b) ** 2
    rho[1, 1] = abs(f) ** 2
    rho[0, 7] = a * np.conj(b)
    rho[7, 0] = np.conj(a) * b
    return rho


def dilated_projector(state: DilatedState) -> np.ndarray:
    psi = state.amplitudes
    return np.outer(psi, psi.conj())


def traced_density_matrix(state: DilatedState) -> np.ndarray:
    """Same object as :func:`accessible_density_matrix`, via partial trace."""
    return partial_trace(dilated_projector(state), 4, {3})
