"""
Threshold graphs: creation sequences, block forms, Laplacians and spectra.

A threshold graph is grown from a single vertex by repeatedly adding either
an isolated vertex (bit 0) or a dominating vertex (bit 1).  Grouping the
maximal runs of equal bits gives the alternating empty/clique block form

    ((((O_{m1} v K_{m2}) u O_{m3}) v K_{m4}) ...) v K_{m2k}

where ``u`` is disjoint union and ``v`` is join.  Vertices are numbered
from 1, block by block, in order of addition.

Block forms are stored internally with an even number of blocks.  A form
whose first block is a clique, ``K_{m1} u O_{m2} v ...``, is stored as
``(1, m1 - 1, m2, ...)`` using ``K_m = O_1 v K_{m-1}``; the user-facing
(canonical) form is recovered by :meth:`BlockForm.canonical`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class ParseError(ValueError):
    """Malformed creation sequence or block form text."""


class DisconnectedError(ValueError):
    """Operation requires a connected threshold graph."""


@dataclass(frozen=True)
class CreationSequence:
    """Binary creation word; bit ``i`` describes vertex ``i + 1``."""

    word: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) < 1:
            raise ParseError("creation sequence must have at least one bit")
        if any(b not in (0, 1) for b in self.word):
            raise ParseError("creation sequence bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def connected(self) -> bool:
        return self.word[-1] == 1

    def __str__(self) -> str:
        return "".join(str(b) for b in self.word)


def parse_creation_sequence(text: str) -> CreationSequence:
    """Parse a word such as ``"0011011"``.

    The first letter is the seed vertex.  Either letter is accepted there
    (a lone vertex is both isolated and dominating) but it is normalized to
    0 so that run grouping starts with an empty block.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty creation sequence")
    bad = sorted({c for c in text if c not in "01"})
    if bad:
        raise ParseError(f"invalid character(s) {''.join(bad)!r} in creation sequence")
    bits = [int(c) for c in text]
    bits[0] = 0
    return CreationSequence(tuple(bits))


@dataclass(frozen=True)
class BlockForm:
    """Internal even-length block form ``(m_1, ..., m_2k)``.

    Odd blocks are empty graphs, even blocks are cliques, and the form always
    ends with a clique so the graph is connected.  ``m_1 == 1`` marks a form
    whose canonical version starts with a clique (odd canonical length).
    """

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(m) for m in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) < 2 or len(blocks) % 2:
            raise ValueError(f"internal block form needs an even number (>= 2) of blocks, got {blocks}")
        if any(m < 1 for m in blocks):
            raise ValueError(f"block sizes must be positive, got {blocks}")

    @classmethod
    def from_canonical(cls, blocks: Sequence[int]) -> "BlockForm":
        """Build from a canonical form: even length, or odd length starting with a clique.

        Both cases require ``m_1 >= 2``.
        """
        blocks = tuple(int(m) for m in blocks)
        if not blocks:
            raise ValueError("empty block form")
        if any(m < 1 for m in blocks):
            raise ValueError(f"block sizes must be positive, got {blocks}")
        if blocks[0] < 2:
            raise ValueError(f"canonical block form needs m_1 >= 2, got {blocks}")
        if len(blocks) % 2 == 0:
            return cls(blocks)
        return cls((1, blocks[0] - 1) + blocks[1:])

    @classmethod
    def parse(cls, text: str) -> "BlockForm":
        """Parse a comma separated form such as ``"2,6,4,4"``.

        Canonical forms are expected; an even-length form with ``m_1 = 1``
        (e.g. ``"1,1"`` for ``K_2``) is taken as the internal encoding.
        """
        try:
            blocks = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ParseError(f"invalid block form {text!r}") from exc
        try:
            if len(blocks) % 2 == 0 and blocks[0] == 1:
                return cls(tuple(blocks))
            return cls.from_canonical(blocks)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks) // 2

    @property
    def odd_origin(self) -> bool:
        """True when the canonical form starts with a clique block."""
        return self.blocks[0] == 1

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """``(sigma_1, ..., sigma_2k)`` with ``sigma_l = m_1 + ... + m_l``."""
        return tuple(int(s) for s in np.cumsum(self.blocks))

    def canonical(self) -> tuple[int, ...]:
        if self.odd_origin:
            return (self.blocks[1] + 1,) + self.blocks[2:]
        return self.blocks

    def block_slices(self) -> list[slice]:
        """Zero-based index slices of each block."""
        out, start = [], 0
        for m in self.blocks:
            out.append(slice(start, start + m))
            start += m
        return out

    def block_of(self, vertex: int) -> int:
        """1-based block index of a 1-based vertex."""
        if not 1 <= vertex <= self.n:
            raise ValueError(f"vertex {vertex} out of range 1..{self.n}")
        for j, s in enumerate(self.partial_sums, start=1):
            if vertex <= s:
                return j
        raise AssertionError("unreachable")

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.canonical())


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``; edges stored as ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {(i, j)} outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for i, j in self.edges:
            d[i - 1] += 1
            d[j - 1] += 1
        return d

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, j in self.edges:
            a[i - 1, j - 1] = a[j - 1, i - 1] = 1.0
        return a

    def neighbors(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))


def creation_to_block_form(seq: CreationSequence) -> BlockForm:
    """Group the maximal runs of a connected creation sequence into blocks."""
    if not seq.connected:
        raise DisconnectedError("disconnected: creation sequence must end with 1")
    word = (0,) + seq.word[1:]
    return BlockForm(tuple(len(list(run)) for _, run in groupby(word)))


def block_form_to_creation(form: BlockForm) -> CreationSequence:
    bits: list[int] = []
    for j, m in enumerate(form.blocks):
        bits.extend([j % 2] * m)
    return CreationSequence(tuple(bits))


def creation_to_graph(seq: CreationSequence) -> Graph:
    """Build the graph vertex by vertex from its creation sequence."""
    edges = set()
    for v, bit in enumerate(seq.word[1:], start=2):
        if bit:
            edges.update((u, v) for u in range(1, v))
    return Graph(seq.n, frozenset(edges))


def block_form_to_graph(form: BlockForm) -> Graph:
    """Realize the nested union/join expression of a block form.

    A vertex is adjacent to every vertex of each later clique block, and a
    clique block is additionally joined to everything before it.
    """
    slices = form.block_slices()
    edges = set()
    for j, sl in enumerate(slices):
        verts = range(sl.start + 1, sl.stop + 1)
        if j % 2 == 1:
            earlier = range(1, sl.start + 1)
            edges.update((u, v) for v in verts for u in earlier)
            edges.update((u, v) for u in verts for v in verts if u < v)
    return Graph(form.n, frozenset(edges))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted in nonincreasing order."""
    return tuple(sorted(g.degrees(), reverse=True))


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian ``D - A`` as a dense float array."""
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def conjugate_spectrum(degrees: Iterable[int]) -> list[int]:
    """Conjugate partition of a degree sequence, ``lambda_j = #{i : d(i) >= j}``.

    For a threshold graph these are exactly its Laplacian eigenvalues, in
    nonincreasing order with ``lambda_n = 0``.
    """
    d = list(degrees)
    n = len(d)
    return [sum(1 for x in d if x >= j) for j in range(1, n + 1)]


def recognize_threshold(g: Graph) -> Optional[CreationSequence]:
    """Peel isolated/dominating vertices; return the creation sequence or ``None``."""
    adj = g.neighbors()
    alive = set(adj)
    deg = {v: len(adj[v]) for v in alive}
    bits: list[int] = []
    while len(alive) > 1:
        r = len(alive)
        v = next((u for u in alive if deg[u] == 0), None)
        bit = 0
        if v is None:
            v = next((u for u in alive if deg[u] == r - 1), None)
            bit = 1
        if v is None:
            return None
        bits.append(bit)
        alive.remove(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
    bits.append(0)
    return CreationSequence(tuple(reversed(bits)))


def _normalize(blocks: list[int]) -> BlockForm:
    # Remove empty blocks by merging their (same-type) neighbours.
    changed = True
    while changed:
        changed = False
        for idx, m in enumerate(blocks):
            if m:
                continue
            if idx == len(blocks) - 1:
                if idx == 1 and blocks[0] == 1:
                    raise ValueError("deletion leaves a single vertex")
                raise DisconnectedError("disconnects: last clique block emptied")
            if idx == 0:
                # O_0 v K_m = K_m = O_1 v K_{m-1}
                blocks = [1, blocks[1] - 1] + blocks[2:]
            else:
                blocks = blocks[: idx - 1] + [blocks[idx - 1] + blocks[idx + 1]] + blocks[idx + 2:]
            changed = True
            break
    return BlockForm(tuple(blocks))


def delete_vertex_block_form(form: BlockForm, l: int) -> BlockForm:
    """Block form after deleting one vertex of internal block ``l`` (1-based)."""
    if not 1 <= l <= len(form.blocks):
        raise ValueError(f"block index {l} out of range 1..{len(form.blocks)}")
    if form.n <= 2:
        raise ValueError("deletion leaves a single vertex")
    blocks = list(form.blocks)
    blocks[l - 1] -= 1
    return _normalize(blocks)


def enumerate_block_forms(max_n: int, min_n: int = 2) -> Iterator[BlockForm]:
    """Every connected threshold graph with ``min_n <= n <= max_n``, once each.

    Order: by ``n``, then by creation word read as a binary number.
    """
    for n in range(max(min_n, 2), max_n + 1):
        for mid in range(2 ** (n - 2)):
            inner = format(mid, f"0{n - 2}b") if n > 2 else ""
            yield creation_to_block_form(parse_creation_sequence("0" + inner + "1"))


def random_creation_sequence(n: int, seed=None, connected: bool = True) -> CreationSequence:
    """Uniformly random creation word of length ``n`` (seeded)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    bits = [0] + [int(b) for b in rng.integers(0, 2, size=n - 1)]
    if connected and n > 1:
        bits[-1] = 1
    return CreationSequence(tuple(bits))
