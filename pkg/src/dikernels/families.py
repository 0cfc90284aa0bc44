"""Constructors for the named digraphs and families used as witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import MAX_ORDER, Digraph, from_arcs
from .errors import EmptyJumpSet, JumpOutOfRange, LoopArc, OrderTooLarge, ZeroPartSize


@dataclass(frozen=True)
class CirculantSpec:
    m: int
    jumps: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "jumps", frozenset(self.jumps))
        if self.m < 2:
            raise JumpOutOfRange(f"circulant order must be at least 2, got {self.m}")
        if self.m > MAX_ORDER:
            raise OrderTooLarge(f"order {self.m} exceeds {MAX_ORDER}")
        if not self.jumps:
            raise EmptyJumpSet("jump set must be nonempty")
        bad = [j for j in self.jumps if not 1 <= j <= self.m - 1]
        if bad:
            raise JumpOutOfRange(f"jumps {sorted(bad)} outside 1..{self.m - 1}")


@dataclass(frozen=True)
class CyclicalPartition:
    """Parts V0, V1, V2 of a 3-cycle extension, arcs running V0 -> V1 -> V2 -> V0."""

    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def __post_init__(self):
        parts = tuple(frozenset(p) for p in self.parts)
        if len(parts) != 3 or any(not p for p in parts):
            raise ZeroPartSize("a cyclical partition needs three nonempty parts")
        if parts[0] & parts[1] or parts[1] & parts[2] or parts[0] & parts[2]:
            raise ValueError("parts must be disjoint")
        object.__setattr__(self, "parts", parts)

    def sizes(self) -> tuple[int, int, int]:
        return tuple(len(p) for p in self.parts)

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


def circulant(m: int | CirculantSpec, jumps: Iterable[int] | None = None) -> Digraph:
    """C_m(J): arc (i, j) iff (j - i) mod m is a jump."""
    spec = m if isinstance(m, CirculantSpec) else CirculantSpec(m, frozenset(jumps or ()))
    rows = []
    for i in range(spec.m):
        rows.append(sum(1 << ((i + j) % spec.m) for j in spec.jumps))
    return Digraph(spec.m, rows)


def directed_cycle(n: int) -> Digraph:
    return circulant(n, {1})


def antihole(n: int) -> Digraph:
    if n < 3:
        raise JumpOutOfRange("antiholes are defined for n >= 3")
    return circulant(n, range(1, n - 1))


def c7_12() -> Digraph:
    return circulant(7, {1, 2})


def transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError("transitive tournament needs n >= 1")
    return from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_digraph(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph(n, [full & ~(1 << v) for v in range(n)])


def biorient(edges: Iterable[tuple[int, int]], n: int) -> Digraph:
    """Complete biorientation: each edge {u, v} becomes both arcs."""
    arcs = []
    for u, v in edges:
        if u == v:
            raise LoopArc(f"loop edge at {u}")
        arcs += [(u, v), (v, u)]
    return from_arcs(n, arcs)


def star_edges(r: int) -> list[tuple[int, int]]:
    """K_{1,r} with centre 0 and leaves 1..r."""
    return [(0, i) for i in range(1, r + 1)]


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def tree_diameter(edges: Iterable[tuple[int, int]], n: int) -> int:
    """Diameter of an undirected tree; raises ValueError if the edges do not form one."""
    edges = list(edges)
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if len(edges) != n - 1:
        raise ValueError("not a tree: wrong edge count")

    def far(src):
        dist = {src: 0}
        queue = [src]
        for u in queue:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) != n:
            raise ValueError("not a tree: disconnected")
        v = max(dist, key=lambda x: (dist[x], -x))
        return v, dist[v]

    a, _ = far(0)
    return far(a)[1]


def biorient_tree(edges: Iterable[tuple[int, int]], n: int, diameter: int | None = None) -> Digraph:
    """Biorient a caller-supplied tree, optionally checking its diameter."""
    edges = list(edges)
    diam = tree_diameter(edges, n)
    if diameter is not None and diam != diameter:
        raise ValueError(f"tree has diameter {diam}, expected {diameter}")
    return biorient(edges, n)


def three_cycle_extension(sizes: tuple[int, int, int], with_partition: bool = False):
    """Blow-up of the directed 3-cycle with independent parts of the given sizes.

    Vertices are numbered part by part, so ``(2, 1, 1)`` gives V0 = {0, 1}, V1 = {2}, V2 = {3}.
    """
    sizes = tuple(sizes)
    if len(sizes) != 3 or any(s < 1 for s in sizes):
        raise ZeroPartSize(f"part sizes must be three positive counts, got {sizes}")
    n = sum(sizes)
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    starts = [0, sizes[0], sizes[0] + sizes[1]]
    parts = [range(starts[i], starts[i] + sizes[i]) for i in range(3)]
    arcs = [(u, v) for i in range(3) for u in parts[i] for v in parts[(i + 1) % 3]]
    d = from_arcs(n, arcs)
    if with_partition:
        return d, CyclicalPartition(tuple(frozenset(p) for p in parts))
    return d


def add_pendants(d: Digraph, anchor: int, count: int) -> Digraph:
    """Attach ``count`` new vertices, each joined to ``anchor`` by a symmetric pair."""
    n = d.n + count
    arcs = d.arcs()
    for u in range(d.n, n):
        arcs += [(anchor, u), (u, anchor)]
    return from_arcs(n, arcs)


# Named digraphs used for witness naming and expected-set specifications.
def named_digraph(expr: str) -> Digraph:
    """Evaluate a generator call such as ``circulant(7,{1,2})`` or ``antihole(5)``."""
    namespace = {
        "circulant": circulant,
        "directed_cycle": directed_cycle,
        "antihole": antihole,
        "transitive_tournament": transitive_tournament,
        "complete_digraph": complete_digraph,
        "c7_12": c7_12,
    }
    return eval(expr, {"__builtins__": {}}, namespace)  # noqa: S307 - fixed whitelist


def witness_library(max_n: int = 15) -> list[tuple[str, Digraph]]:
    """(name, digraph) pairs tried in order when naming a witness."""
    lib = []
    for n in range(3, max_n + 1):
        lib.append((f"directed_cycle({n})", directed_cycle(n)))
    for n in range(4, max_n + 1):
        lib.append((f"antihole({n})", antihole(n)))
    lib.append(("circulant(7,{1,2})", c7_12()))
    return lib


__all__ = [
    "CirculantSpec",
    "CyclicalPartition",
    "add_pendants",
    "antihole",
    "biorient",
    "biorient_tree",
    "c7_12",
    "circulant",
    "complete_digraph",
    "cycle_edges",
    "directed_cycle",
    "named_digraph",
    "path_edges",
    "star_edges",
    "three_cycle_extension",
    "transitive_tournament",
    "tree_diameter",
    "witness_library",
]
