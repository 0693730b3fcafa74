"""Small dense complex linear algebra.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
Multi-qubit operators use big-endian ordering: qubit 0 is the most
significant bit of the basis index, so for three qubits ``a b c`` the
basis position 1 is ``|0 0 1>``.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .errors import ConvergenceError, DimensionError, NotHermitianError

HERMITIAN_TOL = 1e-9
MAX_SWEEPS = 60


def as_matrix(x) -> np.ndarray:
    """Return ``x`` as a 2-D complex array.

    Ragged input and anything that is not two-dimensional is rejected
    instead of being padded or flattened.
    """
    try:
        m = np.array(x, dtype=complex)
    except ValueError as exc:
        raise DimensionError(f"cannot build a matrix from ragged input: {exc}") from None
    if m.ndim != 2 or m.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    return m


def _as_square(x) -> np.ndarray:
    m = as_matrix(x)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def dagger(m) -> np.ndarray:
    return as_matrix(m).conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(ops: Iterable) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for op in ops:
        out = np.kron(out, as_matrix(op))
    return out


def qubit_count(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise DimensionError(f"dimension {dim} is not a power of two")
    return n


def embed(op, target: int, n: int) -> np.ndarray:
    """Lift a single-qubit operator onto qubit ``target`` of ``n``."""
    if not 0 <= target < n:
        raise DimensionError(f"qubit {target} out of range for {n} qubits")
    eye = np.eye(2, dtype=complex)
    return kron_all(op if k == target else eye for k in range(n))


def partial_trace(rho, qubit_count: int, traced) -> np.ndarray:
    """Trace out the qubits listed in ``traced``.

    The kept qubits retain their relative order.
    """
    rho = _as_square(rho)
    n = int(qubit_count)
    if rho.shape[0] != 2 ** n:
        raise DimensionError(f"matrix of shape {rho.shape} is not {n} qubits")
    traced = sorted(set(int(t) for t in traced))
    for t in traced:
        if not 0 <= t < n:
            raise DimensionError(f"traced qubit {t} out of range for {n} qubits")
    keep = [k for k in range(n) if k not in traced]

    tensor = rho.reshape((2,) * (2 * n))
    # einsum labels: row index k -> k, column index k -> n + k; traced pairs share a label
    letters = [chr(ord("a") + k) for k in range(2 * n)]
    for t in traced:
        letters[n + t] = letters[t]
    out_labels = [letters[k] for k in keep] + [letters[n + k] for k in keep]
    spec = "".join(letters) + "->" + "".join(out_labels)
    d = 2 ** len(keep)
    return np.einsum(spec, tensor).reshape(d, d)


class EigenSystem(NamedTuple):
    """Eigenvalues in descending order and the matching unit eigenvectors.

    ``eigenvectors[:, i]`` belongs to ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_defect(h) -> float:
    h = as_matrix(h)
    return float(np.max(np.abs(h - h.conj().T)))


def check_hermitian(h, tol: float = HERMITIAN_TOL) -> np.ndarray:
    h = _as_square(h)
    scale = max(1.0, float(np.max(np.abs(h))))
    defect = hermitian_defect(h)
    if defect > tol * scale:
        raise NotHermitianError(
            f"matrix is not Hermitian: max |H - H^dagger| = {defect:.3e}"
        )
    return h


def eig_hermitian(h, tol: float = HERMITIAN_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenSystem:
    """Diagonalise a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation removes the phase of the pivot ``h[p, q]`` and then
    applies the real two-sided Jacobi rotation, so the accumulated
    transform stays exactly unitary. Pivots below ``1e-18 * ||h||_F`` are
    skipped, which makes nearly diagonal inputs cost a single sweep.
    """
    h = check_hermitian(h, tol)
    a = 0.5 * (h + h.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return EigenSystem(np.zeros(n), v, 0)
    skip = 1e-18 * norm
    stop = 1e-15 * norm

    sweeps = 0
    while True:
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= stop:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})",
                matrix=h,
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g <= skip:
                    continue
                phase = apq / g
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * g)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # J = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                j = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ j
                a[idx, :] = j.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ j

    w = np.real(np.diag(a))
    order = np.argsort(-w, kind="stable")
    return EigenSystem(w[order], v[:, order], sweeps)
