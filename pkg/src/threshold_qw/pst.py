"""
Perfect state transfer on threshold graphs.

The decision is arithmetic: a canonical form ``(m_1, m_2, ...)`` has
perfect transfer (always between vertices 1 and 2, at ``t = pi/2`` and
``3 pi/2`` within one period) exactly when ``m_1 = 2``, ``m_2 = 2 mod 4`` and
every later block is ``0 mod 4``.  :func:`scan_unit_modulus` is a numerical
cross-check on a time grid, not a decider.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

import numpy as np

from .spectral import build_spectral_system, offdiag_entry, propagator_series
from .threshold import BlockForm

FormLike = Union[BlockForm, Sequence[int]]


def as_block_form(form: FormLike) -> BlockForm:
    """Accept a :class:`BlockForm` or a canonical tuple (``m_1 >= 2``)."""
    if isinstance(form, BlockForm):
        return form
    return BlockForm.from_canonical(form)


@dataclass(frozen=True)
class PstCertificate:
    has_pst: bool
    pair: tuple[int, int] | None
    times: tuple[float, ...]
    violated_conditions: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "has_pst": self.has_pst,
            "pair": list(self.pair) if self.pair else None,
            "times": list(self.times),
            "violated_conditions": list(self.violated_conditions),
        }


def pst_certificate(form: FormLike) -> PstCertificate:
    m = as_block_form(form).canonical()
    violated = []
    if m[0] != 2:
        violated.append("m1≠2")
    if len(m) >= 2 and m[1] % 4 != 2:
        violated.append("m2 mod 4 ≠ 2")
    bad = [j for j in range(3, len(m) + 1) if m[j - 1] % 4 != 0]
    if bad:
        violated.append("m_j mod 4 ≠ 0 at j=" + ",".join(map(str, bad)))
    if violated:
        return PstCertificate(False, None, (), tuple(violated))
    return PstCertificate(True, (1, 2), (np.pi / 2, 3 * np.pi / 2), ())


def offdiag_upper_bound(form: FormLike, j0: int) -> float:
    """``2 / sigma_j0``, bounding every off-diagonal entry with larger vertex in block ``j0``."""
    form = as_block_form(form)
    if not 1 <= j0 <= len(form.blocks):
        raise ValueError(f"block index {j0} out of range 1..{len(form.blocks)}")
    return 2.0 / form.partial_sums[j0 - 1]


class ScanHit(NamedTuple):
    t: float
    i: int
    j: int
    modulus: float


def time_grid(step: float, stop: float = 2 * np.pi) -> np.ndarray:
    """``0, step, 2 step, ...`` up to and including ``stop``."""
    if step <= 0:
        raise ValueError("grid step must be positive")
    grid = np.arange(0.0, stop, step)
    return np.append(grid, stop) if stop - grid[-1] > 1e-12 else grid


def _offdiag_moduli(form: BlockForm, times: np.ndarray, chunk: int = 4096):
    """Yield ``(t_chunk, |U_t[i, j]|)`` for the upper triangle, chunked over time."""
    system = build_spectral_system(form)
    iu = np.triu_indices(form.n, k=1)
    for start in range(0, len(times), chunk):
        ts = times[start:start + chunk]
        yield ts, np.abs(propagator_series(system, ts)[:, iu[0], iu[1]]), iu


def scan_unit_modulus(form: FormLike, grid_step: float = 1e-3, tol: float = 1e-6) -> list[ScanHit]:
    """All grid points/pairs ``i < j`` with ``|U_t[i, j]| >= 1 - tol`` over ``[0, 2 pi]``."""
    form = as_block_form(form)
    hits = []
    for ts, mod, iu in _offdiag_moduli(form, time_grid(grid_step)):
        for ti, pi in zip(*np.nonzero(mod >= 1 - tol)):
            hits.append(ScanHit(float(ts[ti]), int(iu[0][pi]) + 1, int(iu[1][pi]) + 1, float(mod[ti, pi])))
    return hits


def max_offdiag_modulus(form: FormLike, t: float = np.pi / 2) -> float:
    """Largest off-diagonal modulus of ``U_t`` using the per-block closed form."""
    form = as_block_form(form)
    return max(abs(offdiag_entry(form, j0, t))
               for j0 in range(1, len(form.blocks) + 1)
               if form.partial_sums[j0 - 1] >= 2)
