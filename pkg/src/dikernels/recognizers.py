"""Family membership tests, containment, isomorphism and canonical forms."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._jit import canon as _canon
from ._jit import graph as _g
from ._jit.induced import find_induced
from .core import Digraph, members
from .errors import LengthOutOfRange, OrderTooLarge

CANON_MAX_ORDER = 10
PERFECT_MAX_ORDER = 10


class NeighborhoodMode(enum.IntEnum):
    IN = _g.IN
    OUT = _g.OUT
    BOTH = _g.BOTH
    CLOSED = _g.CLOSED


def has_k_path(d: Digraph, u: int, v: int, k: int) -> bool:
    """A path of exactly ``k`` arcs on ``k + 1`` distinct vertices from ``u`` to ``v``."""
    if not 1 <= k <= max(d.n - 1, 0):
        raise LengthOutOfRange(f"path length {k} outside 1..{d.n - 1}")
    if u == v:
        raise LengthOutOfRange("a path needs distinct endpoints")
    return bool(_g.has_k_path(d.n, d.rows, u, v, k))


def k_path_ends(d: Digraph, u: int, k: int) -> frozenset[int]:
    return members(int(_g.kpath_ends(d.n, d.rows, u, k)))


def is_k_quasi_transitive(d: Digraph, k: int) -> bool:
    _check_k(k)
    return bool(_g.is_k_quasi_transitive(d.n, d.rows, k))


def is_k_transitive(d: Digraph, k: int) -> bool:
    _check_k(k)
    return bool(_g.is_k_transitive(d.n, d.rows, k))


def is_k_anti_transitive(d: Digraph, k: int) -> bool:
    _check_k(k)
    return bool(_g.is_k_anti_transitive(d.n, d.rows, k))


def _check_k(k):
    if k < 2:
        raise LengthOutOfRange(f"k must be at least 2, got {k}")


def is_semicomplete(d: Digraph) -> bool:
    return bool(_g.is_semicomplete(d.n, d.rows))


def is_asymmetric(d: Digraph) -> bool:
    return bool(_g.is_asymmetric(d.n, d.rows))


def is_locally_semicomplete(d: Digraph, mode: NeighborhoodMode = NeighborhoodMode.BOTH) -> bool:
    """IN/OUT check one neighbourhood, BOTH checks each separately, CLOSED their union."""
    return bool(_g.is_locally_semicomplete(d.n, d.rows, int(NeighborhoodMode(mode))))


def is_arc_locally_semicomplete(d: Digraph, mode: NeighborhoodMode = NeighborhoodMode.BOTH) -> bool:
    mode = NeighborhoodMode(mode)
    if mode is NeighborhoodMode.CLOSED:
        raise ValueError("arc-local semicompleteness has no CLOSED mode")
    return bool(_g.is_arc_locally_semicomplete(d.n, d.rows, int(mode)))


def contains_induced(d: Digraph, h: Digraph) -> dict[int, int] | None:
    """Map from V(H) into V(D) witnessing an induced copy of H, or None."""
    mapping = np.zeros(max(h.n, 1), np.int64)
    if not find_induced(d.n, d.rows, h.n, h.rows, mapping):
        return None
    return {i: int(mapping[i]) for i in range(h.n)}


def is_free_of(d: Digraph, h: Digraph) -> bool:
    return contains_induced(d, h) is None


def contains_subdigraph_tt3(d: Digraph) -> bool:
    """Arcs a->b, b->c, a->c on three distinct vertices, induced or not."""
    return bool(_g.has_tt3_subdigraph(d.n, d.rows))


def is_underlying_perfect(d: Digraph) -> bool:
    if d.n > PERFECT_MAX_ORDER:
        raise OrderTooLarge(f"brute-force perfection test limited to n <= {PERFECT_MAX_ORDER}")
    return bool(_g.is_underlying_perfect(d.n, d.rows))


def circumference(d: Digraph) -> int:
    return int(_g.circumference(d.n, d.rows))


def three_cycles_have_two_symmetric_arcs(d: Digraph) -> bool:
    return bool(_g.three_cycles_have_two_symmetric(d.n, d.rows))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Row-major adjacency bits under the canonical labelling, packed MSB first."""

    n: int
    bytes: bytes

    def hex(self) -> str:
        return f"{self.n}:{self.bytes.hex()}"


def canonical_labeling(d: Digraph) -> list[int]:
    """``pos[v]``: position of vertex ``v`` in the canonical order."""
    if d.n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"canonical form limited to n <= {CANON_MAX_ORDER}")
    pos = _canon.canonical_positions(d.n, d.rows, np.array(d.in_rows, dtype=np.int64))
    return [int(p) for p in pos]


def canonical_form(d: Digraph) -> CanonicalForm:
    pos = canonical_labeling(d)
    vert = [0] * d.n
    for v, p in enumerate(pos):
        vert[p] = v
    bits = np.zeros(d.n * d.n, np.uint8)
    for i, u in enumerate(vert):
        r = d.out_rows[u]
        for j, w in enumerate(vert):
            bits[i * d.n + j] = (r >> w) & 1
    return CanonicalForm(d.n, np.packbits(bits).tobytes())


def canonical_digraph(d: Digraph) -> Digraph:
    from .core import permute

    return permute(d, canonical_labeling(d))


def are_isomorphic(d: Digraph, h: Digraph) -> bool:
    if d.n != h.n or d.num_arcs != h.num_arcs:
        return False
    return canonical_form(d) == canonical_form(h)
