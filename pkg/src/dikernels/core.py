"""Immutable bit-row digraphs, induced subdigraphs, symmetry, connectivity and distances."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ._jit import graph as _g
from .errors import LoopArc, OrderTooLarge, VertexOutOfRange

MAX_ORDER = 63
UNREACHABLE = _g.UNREACHABLE


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Bit mask of a vertex collection, validated against order ``n``."""
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


class Digraph:
    """A loop-free digraph on vertices ``0..n-1`` stored as out- and in-neighbour bit rows.

    Instances are immutable and hashable; equality is equality of labelled arc sets.
    """

    __slots__ = ("_n", "_out", "_in", "_arr")

    def __init__(self, n: int, out_rows: Iterable[int]):
        out = tuple(int(r) for r in out_rows)
        if n < 0 or n > MAX_ORDER:
            raise OrderTooLarge(f"order {n} outside 0..{MAX_ORDER}")
        if len(out) != n:
            raise ValueError("need exactly one row per vertex")
        full = (1 << n) - 1
        inn = [0] * n
        for u, r in enumerate(out):
            if r & ~full:
                raise VertexOutOfRange(f"row {u} has bits beyond order {n}")
            if (r >> u) & 1:
                raise LoopArc(f"loop at vertex {u}")
            v = 0
            while r:
                if r & 1:
                    inn[v] |= 1 << u
                r >>= 1
                v += 1
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", tuple(inn))
        object.__setattr__(self, "_arr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def out_rows(self) -> tuple[int, ...]:
        return self._out

    @property
    def in_rows(self) -> tuple[int, ...]:
        return self._in

    @property
    def rows(self) -> np.ndarray:
        """Out-rows as a read-only ``int64`` array, the form the compiled routines take."""
        if self._arr is None:
            arr = np.array(self._out, dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, "_arr", arr)
        return self._arr

    @property
    def num_arcs(self) -> int:
        return sum(bin(r).count("1") for r in self._out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v) & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(((self._out[u] | self._in[u]) >> v) & 1)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return members(self._out[v])

    def in_neighbors(self, v: int) -> frozenset[int]:
        return members(self._in[v])

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in range(self._n) if (self._out[u] >> v) & 1]

    def vertices(self) -> range:
        return range(self._n)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self):
        return hash((self._n, self._out))

    def __repr__(self):
        return f"Digraph(n={self._n}, arcs={self.arcs()})"


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from ordered pairs; duplicate pairs collapse."""
    if n < 0 or n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in arcs:
        if u == v:
            raise LoopArc(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
    return Digraph(n, rows)


def empty_digraph(n: int) -> Digraph:
    return Digraph(n, [0] * n)


def induced(d: Digraph, s: Iterable[int]) -> Digraph:
    """D[S] relabelled to ``0..|S|-1`` in ascending order of S."""
    keep = sorted(members(mask_of(s, d.n)))
    rows = []
    for u in keep:
        r = d.out_rows[u]
        rows.append(sum(1 << i for i, v in enumerate(keep) if (r >> v) & 1))
    return Digraph(len(keep), rows)


def delete_vertex(d: Digraph, v: int) -> Digraph:
    return induced(d, (u for u in range(d.n) if u != v))


def permute(d: Digraph, perm) -> Digraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(d.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * d.n
    for u, v in d.arcs():
        rows[perm[u]] |= 1 << perm[v]
    return Digraph(d.n, rows)


def complement(d: Digraph) -> Digraph:
    full = (1 << d.n) - 1
    return Digraph(d.n, [full & ~r & ~(1 << u) for u, r in enumerate(d.out_rows)])


def converse(d: Digraph) -> Digraph:
    return Digraph(d.n, d.in_rows)


def is_strong(d: Digraph) -> bool:
    return bool(_g.is_strong(d.n, d.rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs directed distances; ``d[u, v]`` is the length of a shortest u-v path."""

    d: np.ndarray
    diameter: int

    def shell(self, v: int, i: int) -> frozenset[int]:
        """Vertices at distance exactly ``i`` *to* ``v``."""
        return frozenset(int(x) for x in np.flatnonzero(self.d[:, v] == i))

    def __getitem__(self, key):
        return int(self.d[key])


def distances(d: Digraph) -> DistanceMatrix:
    mat = _g.distance_matrix(d.n, d.rows)
    mat.setflags(write=False)
    if d.n and (mat == UNREACHABLE).any():
        diam = UNREACHABLE
    else:
        diam = int(mat.max()) if d.n else 0
    return DistanceMatrix(mat, diam)


def diameter(d: Digraph) -> int:
    return int(_g.diameter(d.n, d.rows))


@dataclass(frozen=True)
class ArcSymmetry:
    symmetric_pairs: frozenset[frozenset[int]]
    asymmetric_arcs: frozenset[tuple[int, int]]

    @property
    def is_asymmetric(self) -> bool:
        return not self.symmetric_pairs

    @property
    def is_symmetric(self) -> bool:
        return not self.asymmetric_arcs


def arc_symmetry(d: Digraph) -> ArcSymmetry:
    sym = set()
    asym = set()
    for u, v in d.arcs():
        if d.has_arc(v, u):
            sym.add(frozenset((u, v)))
        else:
            asym.add((u, v))
    return ArcSymmetry(frozenset(sym), frozenset(asym))


def underlying_edges(d: Digraph) -> list[tuple[int, int]]:
    return sorted({(min(u, v), max(u, v)) for u, v in d.arcs()})
