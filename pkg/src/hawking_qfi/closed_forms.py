"""Closed-form QFI expressions for the AD, GAD and SGAD channels.

The expressions are written in terms of the Kruskal weights
``k0 = 1 / (e^{-x} + 1)`` and ``k1 = 1 / (e^{x} + 1)`` with
``x = omega / T_H``, which keeps ``x -> inf`` finite. Factors of
``sin^2`` or ``cos^2`` that divide out of a fraction are cancelled
analytically, and the remaining 0/0 points (theta at 0 or pi/2 combined
with a vanishing channel coefficient) take their limit in theta.

The SGAD weight-parameter expression has two readings of its second
fraction. ``variant="regrouped"`` (default) takes the denominator
``(1-lam)^2 sin^2 + cos^2 k0``; ``variant="printed"`` divides by
``(1-lam)^2 sin^2`` alone and adds ``cos^2 k0`` as a separate summand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotHermitianError, ParameterDomainError

REGROUPED = "regrouped"
PRINTED = "printed"
VARIANTS = (REGROUPED, PRINTED)


@dataclass(frozen=True)
class ClosedFormInput:
    theta: float
    phi: float = 0.0
    w_over_T: float = 1.0
    lam: float = 0.0
    mu: float = 0.0
    Q: float = 1.0
    Phi: float = 0.0

    def __post_init__(self):
        for name in ("lam", "mu", "Q"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ParameterDomainError(f"{name} must lie in [0, 1], got {value}", term=name)
        if not self.w_over_T >= 0:
            raise ParameterDomainError(f"w/T must be non-negative, got {self.w_over_T}", term="w/T")

    @property
    def weights(self) -> tuple[float, float]:
        x = self.w_over_T
        if math.isinf(x):
            return 1.0, 0.0
        q = math.exp(-x)
        return 1.0 / (1.0 + q), q / (1.0 + q)

    @property
    def trig(self) -> tuple[float, float]:
        s, c = math.sin(self.theta), math.cos(self.theta)
        return s * s, c * c


def _realise(value: complex, allow_complex: bool) -> float | complex:
    if isinstance(value, complex):
        if abs(value.imag) <= 1e-12 * max(1.0, abs(value.real)):
            return value.real
        if allow_complex:
            return value
        raise NotHermitianError(
            f"expression is complex ({value}) because e^(2i Phi) is not real; "
            "pass real_part=True or allow_complex=True"
        )
    return value


def _damped_branch(L2: float, s2: float, c2: float, k0: float) -> float:
    """4 L^2 e^x / (L^2 s^2 (e^x + 1) + c^2 e^x), divided through by e^x."""
    if L2 == 0.0:
        return 0.0
    return 4.0 * L2 / (L2 * s2 / k0 + c2)


def _hawking_branch(L2: float, s2: float, c2: float, k0: float) -> float:
    """(2 L^2 s c - 2 s c k0)^2 / (L^2 s^2 + c^2 k0)."""
    if L2 == 0.0:
        return 4.0 * s2 * k0
    return 4.0 * s2 * c2 * (L2 - k0) ** 2 / (L2 * s2 + c2 * k0)


def _hawking_branch_printed(L2: float, s2: float, c2: float, k0: float) -> float:
    """(2 L^2 s c - 2 s c k0)^2 / (L^2 s^2) + c^2 k0."""
    if L2 == 0.0:
        if c2 == 0.0:
            return 0.0
        raise ParameterDomainError(
            "the 'printed' grouping divides by (1-lambda)^2 sin^2(theta); undefined at lambda = 1",
            term="(1-lambda)^2",
        )
    return 4.0 * c2 * (L2 - k0) ** 2 / L2 + c2 * k0


def _interior_branch(lam2: float, s2: float, c2: float, k1: float) -> float:
    """(2 lam^2 s c - 2 s c k1)^2 / (lam^2 s^2 + c^2 k1)."""
    if lam2 == 0.0:
        return 4.0 * s2 * k1
    if k1 == 0.0:
        return 4.0 * c2 * lam2
    return 4.0 * s2 * c2 * (lam2 - k1) ** 2 / (lam2 * s2 + c2 * k1)


def _squeezed_branch(inp: ClosedFormInput, s2: float, c2: float, k1: float):
    """Q (2 lam mu Qb z s c + Q (2 lam^2 s c - 2 s c k1))^2 / (lam mu Qb z s^2 + Q (lam^2 s^2 + c^2 k1)).

    ``z = e^{2 i Phi}``; written with ``H = lam mu Qb z + Q lam^2`` and
    ``G = H - Q k1``.
    """
    lam, mu, Q = inp.lam, inp.mu, inp.Q
    z = 1.0 if inp.Phi == 0.0 else complex(math.cos(2 * inp.Phi), math.sin(2 * inp.Phi))
    H = lam * mu * (1.0 - Q) * z + Q * lam * lam
    G = H - Q * k1
    if H == 0:
        if k1 == 0.0:
            return 0.0
        return 4.0 * s2 * G * G / k1
    if Q * k1 == 0.0:
        return 4.0 * Q * c2 * H
    return 4.0 * Q * s2 * c2 * G * G / (s2 * H + Q * c2 * k1)


def sf_theta_sgad(inp: ClosedFormInput, variant: str = REGROUPED, real_part: bool = False,
                  allow_complex: bool = False):
    """Weight-parameter QFI for the SGAD channel (four summands)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown expression variant {variant!r}")
    s2, c2 = inp.trig
    k0, k1 = inp.weights
    L2 = (1.0 - inp.lam) ** 2
    Q = inp.Q
    first = Q * Q * _damped_branch(L2, s2, c2, k0)
    if variant == REGROUPED:
        second = Q * Q * _hawking_branch(L2, s2, c2, k0)
    else:
        second = Q * Q * _hawking_branch_printed(L2, s2, c2, k0)
    third = 4.0 * inp.lam * (1.0 - inp.mu) * (1.0 - Q) * Q * c2
    value = first + second + third + _squeezed_branch(inp, s2, c2, k1)
    if real_part and isinstance(value, complex):
        return value.real
    return _realise(value, allow_complex)


def sf_phi_sgad(inp: ClosedFormInput) -> float:
    """Phase-parameter QFI for the SGAD channel.

    ``4 (1-lam)^2 Q^2 s^2 c^2 e^x / ((1-lam)^2 s^2 (e^x + 1) + c^2 e^x)``.
    """
    s2, c2 = inp.trig
    k0, _ = inp.weights
    L2 = (1.0 - inp.lam) ** 2
    if L2 == 0.0:
        return 0.0
    return 4.0 * L2 * inp.Q ** 2 * s2 * c2 / (L2 * s2 / k0 + c2)


def sf_theta_gad(inp: ClosedFormInput) -> float:
    s2, c2 = inp.trig
    k0, k1 = inp.weights
    L2 = (1.0 - inp.lam) ** 2
    Q2 = inp.Q ** 2
    return (
        Q2 * _interior_branch(inp.lam ** 2, s2, c2, k1)
        + Q2 * _damped_branch(L2, s2, c2, k0)
        + Q2 * _hawking_branch(L2, s2, c2, k0)
        + 4.0 * inp.lam * (1.0 - inp.Q) * inp.Q * c2
    )


# the GAD phase expression is the SGAD one; kept as a separate name
sf_phi_gad = sf_phi_sgad


def sf_theta_ad(inp: ClosedFormInput) -> float:
    s2, c2 = inp.trig
    k0, k1 = inp.weights
    L2 = (1.0 - inp.lam) ** 2
    return (
        _damped_branch(L2, s2, c2, k0)
        + _hawking_branch(L2, s2, c2, k0)
        + _interior_branch(inp.lam ** 2, s2, c2, k1)
    )


def sf_phi_ad(inp: ClosedFormInput) -> float:
    """``(lam - 1)^2 sin^2(2 theta) e^x / ((lam-1)^2 s^2 (e^x + 1) + c^2 e^x)``."""
    s2, c2 = inp.trig
    k0, _ = inp.weights
    L2 = (inp.lam - 1.0) ** 2
    if L2 == 0.0:
        return 0.0
    return L2 * math.sin(2.0 * inp.theta) ** 2 / (L2 * s2 / k0 + c2)


def eigenvalue_triple(inp: ClosedFormInput, A: complex, B: complex, F: complex) -> tuple[float, float, float]:
    """Nonzero eigenvalues ``(e1, e2, e3)`` of the closed-form channel output.

    ``e2`` belongs to the |000>, |111> coherent block.
    """
    if inp.Phi not in (0.0, math.pi):
        raise NotHermitianError("eigenvalue e1 is complex unless Phi is 0 or pi")
    lam, mu, Q = inp.lam, inp.mu, inp.Q
    b2, f2, a2 = abs(B) ** 2, abs(F) ** 2, abs(A) ** 2
    e1 = Q * (b2 * lam * mu * (1.0 - Q) + Q * (b2 * lam * lam + f2))
    e2 = Q * Q * (b2 * (1.0 - lam) ** 2 + a2)
    e3 = b2 * lam * Q * (1.0 - mu) * (1.0 - Q)
    return e1, e2, e3


def theta_zero_value(lam: float, mu: float, Q: float) -> float:
    """Weight-parameter SGAD expression at theta = 0, independent of w/T."""
    return 4.0 * Q * ((1.0 - lam) ** 2 * Q + lam * (1.0 - mu) * (1.0 - Q))


THETA_FORMS = {"sgad": sf_theta_sgad, "gad": sf_theta_gad, "ad": sf_theta_ad}
PHI_FORMS = {"sgad": sf_phi_sgad, "gad": sf_phi_gad, "ad": sf_phi_ad}
