"""
Locating missing links in a complete network with free quantum evolution.

For ``n = 0 mod 4`` the propagator ``U_{pi/2}`` of ``K_n`` minus a matching
swaps the two ends of every missing edge and fixes every other vertex, so
a walker started at a vertex and measured there after time ``pi/2``
either stays (the vertex is intact) or lands on its missing partner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .oracle import expm_hermitian
from .threshold import Graph, laplacian

HALF_PI = np.pi / 2


def _pair(e) -> tuple[int, int]:
    i, j = (int(v) for v in e)
    if i == j:
        raise ValueError(f"degenerate pair {(i, j)}")
    return (min(i, j), max(i, j))


def _check_matching(n: int, pairs: Iterable) -> frozenset:
    pairs = frozenset(_pair(e) for e in pairs)
    seen: set[int] = set()
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair {(i, j)} outside 1..{n}")
        if i in seen or j in seen:
            raise ValueError(f"pairs overlap at {(i, j)}; missing edges must be vertex-disjoint")
        seen.update((i, j))
    return pairs


def _check_n(n: int):
    if n < 4 or n % 4:
        raise ValueError(f"protocol requires n = 4m, got n = {n}")


@dataclass(frozen=True)
class HiddenFault:
    kind: str
    edges: frozenset
    n: int

    def __post_init__(self):
        if self.kind not in ("single_edge", "matching"):
            raise ValueError(f"unknown fault kind {self.kind!r}")
        object.__setattr__(self, "edges", _check_matching(self.n, self.edges))
        if self.kind == "single_edge" and len(self.edges) != 1:
            raise ValueError("single_edge fault needs exactly one pair")


def complete_minus(n: int, missing: Iterable) -> Graph:
    missing = _check_matching(n, missing)
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if e not in missing))


@lru_cache(maxsize=256)
def _propagator(n: int, missing: frozenset, t: float) -> np.ndarray:
    return expm_hermitian(laplacian(complete_minus(n, missing)), t)


def measurement_distribution(n: int, missing, start: int, t: float = HALF_PI) -> np.ndarray:
    """Probabilities of finding the walker at vertices ``1..n`` (index ``v - 1``)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= start <= n:
        raise ValueError(f"start vertex {start} out of range 1..{n}")
    missing = _check_matching(n, missing)
    return np.abs(_propagator(n, missing, float(t))[:, start - 1]) ** 2


def evolve_and_measure(n: int, missing, start: int, t: float = HALF_PI, seed=None) -> int:
    """Evolve from ``start`` for time ``t`` on ``K_n`` minus ``missing``; return the measured vertex.

    ``seed`` is an int or a :class:`numpy.random.Generator`.
    """
    probs = measurement_distribution(n, missing, start, t)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    return int(rng.choice(n, p=probs)) + 1


@dataclass
class Step:
    start: int
    t: float
    measured: int

    @property
    def outcome(self) -> str:
        return "stayed" if self.measured == self.start else "moved"

    def to_json(self) -> dict:
        return {"start": self.start, "t": self.t, "measured": self.measured, "outcome": self.outcome}


@dataclass
class DetectionTranscript:
    n: int
    protocol: str
    steps: list[Step] = field(default_factory=list)
    found_edges: list[tuple[int, int]] = field(default_factory=list)
    inferred: list[bool] = field(default_factory=list)
    success: bool = False

    @property
    def evolutions_used(self) -> int:
        return len(self.steps)

    def record_edge(self, e, inferred: bool = False):
        self.found_edges.append(_pair(e))
        self.inferred.append(inferred)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "protocol": self.protocol,
            "steps": [s.to_json() for s in self.steps],
            "found_edges": [list(e) for e in self.found_edges],
            "inferred": list(self.inferred),
            "evolutions_used": self.evolutions_used,
            "success": self.success,
        }


def _probe(tr: DetectionTranscript, missing: frozenset, v: int, rng) -> int:
    w = evolve_and_measure(tr.n, missing, v, HALF_PI, rng)
    tr.steps.append(Step(v, HALF_PI, w))
    return w


def detect_missing_edge(n: int, hidden, seed=None) -> DetectionTranscript:
    """Find the single missing edge of ``K_n`` by probing vertices in ascending order.

    Uses at most ``n - 2`` evolutions: once all but two vertices have stayed
    put, the remaining pair is the missing edge.
    """
    _check_n(n)
    missing = HiddenFault("single_edge", frozenset([hidden]), n).edges
    rng = np.random.default_rng(seed)
    tr = DetectionTranscript(n, "single_edge")
    unresolved = list(range(1, n + 1))
    while len(unresolved) > 2:
        v = unresolved.pop(0)
        w = _probe(tr, missing, v, rng)
        if w != v:
            tr.record_edge((v, w))
            break
    else:
        tr.record_edge(tuple(unresolved), inferred=True)
    tr.success = set(tr.found_edges) == set(missing)
    return tr


def detect_missing_matching(n: int, hidden, known_size: Optional[int] = None, seed=None) -> DetectionTranscript:
    """Find a missing matching of ``K_n`` vertex by vertex.

    With ``known_size`` the run stops as soon as that many edges are found,
    and the last pair is inferred without an evolution when exactly two
    unresolved vertices must form it.  A perfect matching therefore costs
    ``n/2 - 1`` evolutions.  Without it every vertex is resolved.
    """
    _check_n(n)
    missing = HiddenFault("matching", frozenset(hidden), n).edges
    if known_size is not None and not 0 <= known_size <= n // 2:
        raise ValueError(f"matching size {known_size} outside 0..{n // 2}")
    rng = np.random.default_rng(seed)
    tr = DetectionTranscript(n, "matching")
    unresolved = list(range(1, n + 1))
    while len(unresolved) > 1:
        if known_size is not None:
            left = known_size - len(tr.found_edges)
            if left == 0:
                break
            if len(unresolved) == 2 and left == 1:
                tr.record_edge(tuple(unresolved), inferred=True)
                break
        v = unresolved.pop(0)
        w = _probe(tr, missing, v, rng)
        if w != v:
            unresolved.remove(w)
            tr.record_edge((v, w))
    tr.success = set(tr.found_edges) == set(missing)
    return tr


def step_budgets(n: int) -> dict[str, int]:
    """Evolution counts for the quantum protocols and the classical matching search."""
    _check_n(n)
    return {
        "quantum_edge": n - 1,
        "quantum_matching": n // 2 - 1,
        "classical_matching": sum(range(3, n, 2)),
    }
