"""
Deleting one vertex from a graph with perfect state transfer.

The bounds below cap ``|U_t[1, 2]|`` for the vertex-deleted graph over all
``t``; they stay below one, so the (1, 2) amplitude carries no reliable
signal about which vertex went missing.  Block sizes and partial sums in
the coefficients are those of the deleted graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .oracle import eigh
from .pst import FormLike, as_block_form, pst_certificate, time_grid
from .spectral import build_spectral_system, propagator
from .threshold import BlockForm, block_form_to_graph, delete_vertex_block_form, laplacian


class CosMaxMin(NamedTuple):
    t_star: float
    value: float
    analytic: float


def lemma_cos_maxmin(a: int, variant: str = "i", grid_step: float = 1e-5) -> CosMaxMin:
    """Grid maximum over ``[0, 2 pi]`` of the smallest of three cosines.

    variant ``"i"``:  ``min(-cos 2t, -cos at,  cos(a-2)t)``
    variant ``"ii"``: ``min(-cos 2t,  cos at, -cos(a-2)t)``

    For odd ``a >= 3`` both maxima equal ``cos(pi / a)``.
    """
    if int(a) != a or a < 3 or a % 2 == 0:
        raise ValueError(f"a must be an odd integer >= 3, got {a}")
    if variant not in ("i", "ii"):
        raise ValueError(f"variant must be 'i' or 'ii', got {variant!r}")
    t = time_grid(grid_step)
    s = 1.0 if variant == "i" else -1.0
    f = np.minimum(-np.cos(2 * t), np.minimum(-s * np.cos(a * t), s * np.cos((a - 2) * t)))
    k = int(np.argmax(f))
    return CosMaxMin(float(t[k]), float(f[k]), math.cos(math.pi / a))


@dataclass(frozen=True)
class NodeDeletionBound:
    original: BlockForm
    deleted_block: int
    deleted_form: BlockForm
    case: str
    bound: float
    g: Optional[float] = None
    a: Optional[int] = None
    grid_max_observed: Optional[float] = None

    def to_json(self) -> dict:
        return {
            "original": list(self.original.canonical()),
            "deleted_block": self.deleted_block,
            "deleted_form": list(self.deleted_form.canonical()),
            "case": self.case,
            "bound": self.bound,
            "g": self.g,
            "a": self.a,
            "grid_max_observed": self.grid_max_observed,
        }


def _require_pst_even(form: BlockForm):
    if form.odd_origin:
        raise ValueError("node deletion bounds are stated for even block forms only")
    cert = pst_certificate(form)
    if not cert.has_pst:
        raise ValueError("form violates the transfer conditions: " + "; ".join(cert.violated_conditions))


def _three_term_bound(alpha: float, beta: float, gamma: float, a: int, g: float) -> float:
    # |z| <= sqrt(g - (1 - cos(pi/a)) beta gamma) + (1 - alpha - beta - gamma)
    return math.sqrt(g - (1 - math.cos(math.pi / a)) * beta * gamma) + 1 - alpha - beta - gamma


def node_deletion_bound(form: FormLike, l: int, grid_step: Optional[float] = None) -> NodeDeletionBound:
    """Upper bound on ``|U_t[1, 2]|`` after deleting a vertex of block ``l``.

    ``form`` must be an even form with ``m_1 = 2``, ``m_2 = 2 mod 4`` and
    later blocks ``0 mod 4``.  With ``grid_step`` the oracle maximum of the
    (1, 2) modulus over a time grid is attached as ``grid_max_observed``.
    """
    form = as_block_form(form)
    _require_pst_even(form)
    if not 1 <= l <= len(form.blocks):
        raise ValueError(f"block index {l} out of range 1..{len(form.blocks)}")
    m = form.blocks
    hat = delete_vertex_block_form(form, l)
    g = a = None
    if l == 1:
        case = "i"
        bound = 2.0 / (m[1] + 1)
    else:
        mh, sh = hat.blocks, hat.partial_sums
        alpha = 1.0 / sh[0]
        beta = mh[1] / (sh[0] * sh[1])
        g = (alpha + beta + 1.0 / sh[-1]) ** 2
        if l % 2 == 0:
            case = "ii"
            a = 1 + sum(m[1::2])
            gamma = 1.0 / sh[-1]
        else:
            case = "iii"
            a = sum(m[0:l:2]) - 1
            gamma = mh[l] / (sh[l - 1] * sh[l])
        bound = _three_term_bound(alpha, beta, gamma, a, g)
    observed = observed_max_modulus(hat, grid_step) if grid_step else None
    return NodeDeletionBound(form, l, hat, case, bound, g, a, observed)


def observed_max_modulus(form: BlockForm, grid_step: float = 1e-3, pair=(1, 2)) -> float:
    """Oracle maximum of ``|U_t[i, j]|`` over ``t`` in ``[0, 2 pi]``."""
    dec = eigh(laplacian(block_form_to_graph(form)))
    i, j = pair
    weights = dec.eigenvectors[i - 1] * dec.eigenvectors[j - 1]
    best = 0.0
    t = time_grid(grid_step)
    for start in range(0, len(t), 8192):
        z = np.exp(-1j * np.outer(t[start:start + 8192], dec.eigenvalues)) @ weights
        best = max(best, float(np.abs(z).max()))
    return best


def last_block_deletion_modulus(form: FormLike) -> float:
    """Closed form ``|U_{pi/2}[1, 2]|`` after deleting a vertex of the last block.

    ``sqrt(1 - 2 (s - 1) / s^2)`` with ``s`` the vertex count after deletion.
    Works for both even and odd canonical forms.
    """
    form = as_block_form(form)
    cert = pst_certificate(form)
    if not cert.has_pst:
        raise ValueError("form violates the transfer conditions: " + "; ".join(cert.violated_conditions))
    if form.blocks[-1] < 2:
        raise ValueError("last block must have at least 2 vertices")
    s = form.n - 1
    return math.sqrt(1 - 2 * (s - 1) / s ** 2)


def last_block_deletion_direct(form: FormLike) -> float:
    """``|U_{pi/2}[1, 2]|`` of the deleted graph from its spectral propagator."""
    form = as_block_form(form)
    hat = delete_vertex_block_form(form, len(form.blocks))
    return abs(propagator(build_spectral_system(hat), np.pi / 2).matrix[0, 1])
