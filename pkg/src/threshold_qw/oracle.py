"""
Brute-force numerical oracle.

Dense real symmetric eigendecomposition by cyclic Jacobi rotations and the
Hermitian exponential ``exp(-i L t)`` built from it.  Nothing here knows
about threshold graphs; it is the independent reference every closed form
is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

SNAP_TOL = 1e-8


class ConvergenceError(ArithmeticError):
    """Jacobi sweeps exhausted before the off-diagonal mass vanished."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (off-diagonal residual {residual:.3e})")
        self.residual = residual


def as_symmetric(a) -> np.ndarray:
    """Return ``a`` as a float array, requiring exact symmetry."""
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix order must be >= 1")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal eigenvectors in the columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.T

    def integer_residual(self) -> float:
        return float(np.max(np.abs(self.eigenvalues - np.rint(self.eigenvalues))))

    def integer_spectrum(self, tol: float = SNAP_TOL) -> Optional[list[int]]:
        """Eigenvalues snapped to integers, or ``None`` if any is farther than ``tol``."""
        if self.integer_residual() > tol:
            return None
        return [int(x) for x in np.rint(self.eigenvalues)]


def eigh(a, tol: float = 1e-13, max_sweeps: int = 100) -> EigenDecomposition:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Parameters
    ----------
    a : array_like
        Real symmetric matrix.
    tol : float
        Sweeps stop once the off-diagonal Frobenius norm is at most
        ``tol * max(1, ||a||_F)``.
    max_sweeps : int
        Sweep budget; :class:`ConvergenceError` is raised when exceeded.

    Returns
    -------
    EigenDecomposition
        Eigenvalues ascending, eigenvectors as columns.
    """
    a = as_symmetric(a).copy()
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    threshold = tol * scale

    offmask = ~np.eye(n, dtype=bool)

    def off(m):
        return float(np.linalg.norm(m[offmask]))

    sweeps = 0
    while off(a) > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", off(a))
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], v[:, order], sweeps)


def expm_hermitian(L, t: float, decomposition: Optional[EigenDecomposition] = None) -> np.ndarray:
    """``exp(-i L t)`` for real symmetric ``L`` via its eigendecomposition."""
    dec = decomposition if decomposition is not None else eigh(L)
    v = dec.eigenvectors
    return (v * np.exp(-1j * dec.eigenvalues * t)) @ v.T


def max_abs_diff(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"order mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def unitarity_defect(u) -> float:
    """``max |U U* - I|``."""
    u = np.asarray(u)
    return max_abs_diff(u @ u.conj().T, np.eye(u.shape[0]))


def matrix_to_json(m) -> list:
    """Rows of ``[re, im]`` pairs."""
    m = np.asarray(m, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


def matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])
