"""Quantum Fisher information of one-parameter density-matrix families.

Two independent routes are implemented. :func:`qfi_sld` uses the
symmetric logarithmic derivative in the eigenbasis of rho, needing only
``d rho``. :func:`qfi_spectral` differentiates eigenvalues and
eigenvectors separately and assembles the classical, pure-state and
mixing contributions. Both use a fourth-order central difference.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DegenerateSpectrumError, GaugeError, NegativeQfiError
from .linalg import eig_hermitian

DEFAULT_STEP = 1e-4
DEFAULT_EPS = 1e-10
NEGATIVE_TOL = 1e-8
# wider step for second differences: rounding grows as 1/h^2
CURVATURE_STEP = 3e-3

_STENCIL = (-2, -1, 1, 2)
_WEIGHTS = (1.0, -8.0, 8.0, -1.0)


def derivative(f: Callable[[float], np.ndarray], x: float, h: float = DEFAULT_STEP) -> np.ndarray:
    """``[f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)] / (12 h)``."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h}")
    acc = None
    for k, w in zip(_STENCIL, _WEIGHTS):
        term = w * np.asarray(f(x + k * h))
        acc = term if acc is None else acc + term
    return acc / (12.0 * h)


def second_derivative(f: Callable[[float], np.ndarray], x: float, h: float = CURVATURE_STEP) -> np.ndarray:
    """``[-f(x-2h) + 16 f(x-h) - 30 f(x) + 16 f(x+h) - f(x+2h)] / (12 h^2)``."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h}")
    acc = -30.0 * np.asarray(f(x))
    for k, w in ((-2, -1.0), (-1, 16.0), (1, 16.0), (2, -1.0)):
        acc = acc + w * np.asarray(f(x + k * h))
    return acc / (12.0 * h * h)


@dataclass(frozen=True)
class ParamFamily:
    """A density matrix as a function of one real parameter.

    ``context`` records the parameters held fixed; it is informational.
    """

    evaluator: Callable[[float], np.ndarray]
    parameter_label: str
    context: dict = field(default_factory=dict)

    def __call__(self, x: float) -> np.ndarray:
        return self.evaluator(x)


@dataclass(frozen=True)
class QfiResult:
    value: float
    classical_term: float
    pure_term: float
    mixture_correction: float
    method: str
    fd_step: float
    support_threshold: float


def _guard(value: float) -> float:
    if value < -NEGATIVE_TOL:
        raise NegativeQfiError(f"QFI evaluated to {value:.3e}; derivative step or gauge failed")
    return max(value, 0.0)


def qfi_sld(fam, x: float, h: float = DEFAULT_STEP, eps: float = DEFAULT_EPS,
            continuous: bool = False) -> QfiResult:
    """``2 sum_{p_i + p_j > eps} |<i| d rho |j>|^2 / (p_i + p_j)``.

    ``classical_term`` collects the diagonal (i = j) pairs and
    ``pure_term`` the off-diagonal ones; ``mixture_correction`` is zero.

    Where an eigenvalue of rho touches zero the plain sum jumps. With
    ``continuous=True`` the value is the limit from neighbouring points:
    kernel-support pairs are replaced by ``2 Tr(P0 d^2 rho)``, with P0 the
    projector on eigenvalues below ``eps``. Away from such points the two
    agree to finite-difference accuracy.
    """
    es = eig_hermitian(fam(x))
    p = es.eigenvalues
    v = es.eigenvectors
    d = v.conj().T @ derivative(fam, x, h) @ v
    denom = p[:, None] + p[None, :]
    keep = denom > eps
    terms = np.zeros_like(denom)
    terms[keep] = 2.0 * np.abs(d[keep]) ** 2 / denom[keep]
    if continuous:
        kernel = p <= eps
        if kernel.any():
            terms[np.ix_(kernel, ~kernel)] = 0.0
            terms[np.ix_(~kernel, kernel)] = 0.0
            vk = v[:, kernel]
            curvature = np.real(np.trace(vk.conj().T @ second_derivative(fam, x) @ vk))
            terms[0, 0] += 2.0 * curvature
    classical = float(np.trace(terms))
    off = float(terms.sum() - classical)
    total = _guard(classical + off)
    return QfiResult(total, classical, off, 0.0, "sld", h, eps)


def _align(vectors: np.ndarray, anchors: np.ndarray) -> np.ndarray:
    """Rotate each column's phase so its anchor component is real positive."""
    comp = vectors[anchors, np.arange(vectors.shape[1])]
    mag = np.abs(comp)
    if np.any(mag < 1e-8):
        raise GaugeError("anchor component vanished at a stencil point; no dominant component")
    return vectors * (mag / comp)[None, :]


def qfi_spectral(fam, x: float, h: float = DEFAULT_STEP, eps: float = DEFAULT_EPS) -> QfiResult:
    """QFI as classical + pure-state - mixing terms over the support of rho.

    Eigen-branches are followed across the five stencil points by maximal
    overlap with the centre eigenvectors. At every point each branch is
    rephased so that its largest centre component is real positive, then
    eigenvalues and eigenvectors are differenced.
    """
    centre = eig_hermitian(fam(x))
    p = centre.eigenvalues
    support = np.flatnonzero(p > eps)
    if support.size == 0:
        raise DegenerateSpectrumError("rho has no eigenvalue above the support threshold")
    ps = p[support]
    if support.size > 1:
        gaps = np.abs(ps[:, None] - ps[None, :])[np.triu_indices(support.size, 1)]
        if gaps.min() <= 10.0 * eps:
            raise DegenerateSpectrumError(
                f"support eigenvalues are degenerate (gap {gaps.min():.3e}); use qfi_sld"
            )
    psi0 = centre.eigenvectors[:, support]
    anchors = np.argmax(np.abs(psi0), axis=0)
    psi0 = _align(psi0, anchors)

    dp = np.zeros(support.size)
    dpsi = np.zeros_like(psi0)
    for k, w in zip(_STENCIL, _WEIGHTS):
        es = eig_hermitian(fam(x + k * h))
        overlap = np.abs(psi0.conj().T @ es.eigenvectors)
        match = np.argmax(overlap, axis=1)
        if len(set(match.tolist())) != support.size or overlap[np.arange(support.size), match].min() < 0.5:
            raise DegenerateSpectrumError("eigen-branches could not be matched across the stencil")
        dp += w * es.eigenvalues[match]
        dpsi += w * _align(es.eigenvectors[:, match], anchors)
    dp /= 12.0 * h
    dpsi /= 12.0 * h

    classical = float(np.sum(dp ** 2 / ps))
    inner = psi0.conj().T @ dpsi  # inner[i, j] = <psi_i | d psi_j>
    norms = np.real(np.sum(np.abs(dpsi) ** 2, axis=0))
    per_state = 4.0 * (norms - np.abs(np.diag(inner)) ** 2)
    pure = float(np.sum(ps * per_state))
    weight = 8.0 * ps[:, None] * ps[None, :] / (ps[:, None] + ps[None, :])
    np.fill_diagonal(weight, 0.0)
    mixture = float(np.sum(weight * np.abs(inner) ** 2))
    total = _guard(classical + pure - mixture)
    return QfiResult(total, classical, pure, mixture, "spectral", h, eps)
