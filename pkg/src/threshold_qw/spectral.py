"""
Exact Laplacian eigensystem of a threshold graph and its propagator.

For an internal block form ``(m_1, ..., m_2k)`` with partial sums
``sigma_l`` the spectral components are

* block 1: eigenvalue ``m_2 + m_4 + ... + m_2k`` with projector
  ``I - J/m_1`` on block 1 (absent when ``m_1 == 1``);
* block ``j >= 2``: eigenvalue ``m_{j+1} + m_{j+3} + ...`` for odd ``j`` and
  ``sigma_j + m_{j+2} + m_{j+4} + ...`` for even ``j``, with a projector
  supported on the first ``sigma_j`` vertices;
* the null component ``J / sigma_2k``.

The propagator is ``U_t = sum_c exp(-i t lambda_c) P_c``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .oracle import matrix_to_json, unitarity_defect
from .threshold import BlockForm


@dataclass(frozen=True)
class SpectralComponent:
    eigenvalue: int
    projector: np.ndarray
    multiplicity: int
    block: int  # 0 for the null component


@dataclass(frozen=True)
class ThresholdSpectralSystem:
    form: BlockForm
    components: tuple[SpectralComponent, ...]

    @property
    def n(self) -> int:
        return self.form.n

    def spectrum(self) -> list[int]:
        """Eigenvalues with multiplicity, nonincreasing."""
        out = []
        for c in self.components:
            out.extend([c.eigenvalue] * c.multiplicity)
        return sorted(out, reverse=True)

    def multiplicities(self) -> dict[int, int]:
        cnt: Counter = Counter()
        for c in self.components:
            cnt[c.eigenvalue] += c.multiplicity
        return dict(cnt)

    def laplacian(self) -> np.ndarray:
        return sum(c.eigenvalue * c.projector for c in self.components)


def block_eigenvalue(form: BlockForm, j: int) -> int:
    """Eigenvalue attached to 1-based block ``j``."""
    m = form.blocks
    if j % 2:
        # lambda_0(j) = m_{j+1} + m_{j+3} + ... + m_2k
        return sum(m[j::2])
    # lambda_1(j) = sigma_j + m_{j+2} + m_{j+4} + ... + m_2k
    return form.partial_sums[j - 1] + sum(m[j + 1::2])


def build_spectral_system(form: BlockForm) -> ThresholdSpectralSystem:
    m = form.blocks
    sig = form.partial_sums
    n = form.n
    comps = []
    if m[0] > 1:
        p = np.zeros((n, n))
        p[: m[0], : m[0]] = np.eye(m[0]) - 1.0 / m[0]
        comps.append(SpectralComponent(block_eigenvalue(form, 1), p, m[0] - 1, 1))
    for j in range(2, len(m) + 1):
        prev, cur, mj = sig[j - 2], sig[j - 1], m[j - 1]
        p = np.zeros((n, n))
        p[:prev, :prev] = mj / (prev * cur)
        p[:prev, prev:cur] = -1.0 / cur
        p[prev:cur, :prev] = -1.0 / cur
        p[prev:cur, prev:cur] = np.eye(mj) - 1.0 / cur
        comps.append(SpectralComponent(block_eigenvalue(form, j), p, mj, j))
    comps.append(SpectralComponent(0, np.full((n, n), 1.0 / n), 1, 0))
    return ThresholdSpectralSystem(form, tuple(comps))


@dataclass(frozen=True)
class Propagator:
    t: float
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return unitarity_defect(self.matrix) <= tol

    def to_json(self) -> dict:
        return {"t": float(self.t), "n": self.n, "matrix": matrix_to_json(self.matrix)}


def propagator(system: ThresholdSpectralSystem, t: float) -> Propagator:
    u = sum(np.exp(-1j * t * c.eigenvalue) * c.projector for c in system.components)
    return Propagator(float(t), u)


def propagator_series(system: ThresholdSpectralSystem, times) -> np.ndarray:
    """Stack of ``U_t`` for every ``t`` in ``times``; shape ``(len(times), n, n)``."""
    times = np.asarray(times, dtype=float)
    lam = np.array([c.eigenvalue for c in system.components], dtype=float)
    proj = np.stack([c.projector for c in system.components])
    phases = np.exp(-1j * np.outer(times, lam))
    return np.tensordot(phases, proj, axes=(1, 0))


def _check_j0(form: BlockForm, j0: int):
    if not 1 <= j0 <= len(form.blocks):
        raise ValueError(f"block index {j0} out of range 1..{len(form.blocks)}")
    if form.partial_sums[j0 - 1] < 2:
        raise ValueError(f"no off-diagonal pair has maximum block {j0}")


def offdiag_entry(form: BlockForm, j0: int, t):
    """Common value of the off-diagonal entries of ``U_t`` whose larger vertex lies in block ``j0``.

    ``t`` may be a scalar or an array.
    """
    _check_j0(form, j0)
    m, sig = form.blocks, form.partial_sums
    t = np.asarray(t, dtype=float)
    z = np.exp(-1j * t * block_eigenvalue(form, j0)) * (-1.0 / sig[j0 - 1])
    for j in range(j0 + 1, len(m) + 1):
        z = z + np.exp(-1j * t * block_eigenvalue(form, j)) * (m[j - 1] / (sig[j - 2] * sig[j - 1]))
    z = z + 1.0 / sig[-1]
    return complex(z) if z.ndim == 0 else z


def telescoping_sum(form: BlockForm, j0: int) -> Fraction:
    """``sum_{j > j0} m_j / (sigma_{j-1} sigma_j) + 1/sigma_2k`` in exact arithmetic."""
    if not 1 <= j0 <= len(form.blocks):
        raise ValueError(f"block index {j0} out of range 1..{len(form.blocks)}")
    m, sig = form.blocks, form.partial_sums
    total = Fraction(1, sig[-1])
    for j in range(j0 + 1, len(m) + 1):
        total += Fraction(m[j - 1], sig[j - 2] * sig[j - 1])
    return total


def fidelity(u: Propagator, i: int, j: int) -> float:
    """Probability ``|<j|U_t|i>|^2`` of moving from vertex ``i`` to ``j``."""
    n = u.n
    for v in (i, j):
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
    return abs(u.matrix[j - 1, i - 1]) ** 2

