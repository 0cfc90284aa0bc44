"""Classifier for strong 4-transitive digraphs into eight structural families.

1 complete digraph; 2 3-cycle extension; 3 circumference 3 with a spanning
3-cycle extension and restricted symmetric arcs; 4 a clause-2/3 core with
pendant symmetric vertices; 5 biorientation of a 5-cycle; 6 biorientation of a
star K_{1,r}, r >= 3; 7 biorientation of a diameter-3 tree; 8 remaining strong
digraphs of order at most 4.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import Digraph, arc_symmetry, induced, is_strong, underlying_edges
from .errors import PreconditionViolated
from .families import CyclicalPartition, tree_diameter
from .recognizers import circumference, is_k_transitive

# Clause 4 refers back to "1. or 2." for the structure of its core; the
# clauses that describe 3-cycle extensions are 2 and 3, so those are used.
CLAUSE4_CORE_CLAUSES = (2, 3)
CLAUSE4_NOTE = "clause 4 core checked against clauses 2/3 (back-reference read as the 3-cycle-extension clauses)"


@dataclass(frozen=True)
class FamilyLabel:
    index: int
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.index <= 8:
            raise ValueError(f"family index {self.index} outside 1..8")


def spanning_three_cycle_extensions(d: Digraph) -> Iterator[CyclicalPartition]:
    """Every partition (V0, V1, V2), vertex 0 in V0, whose blocks V0->V1->V2->V0 are all arcs of D.

    Colourings are tried in lexicographic order with block-completeness pruning.
    """
    n = d.n
    if n < 3:
        return
    colour = [0] * n

    def consistent(v):
        c = colour[v]
        for u in range(v):
            cu = colour[u]
            if (cu + 1) % 3 == c and not d.has_arc(u, v):
                return False
            if (c + 1) % 3 == cu and not d.has_arc(v, u):
                return False
        return True

    def rec(v):
        if v == n:
            parts = [frozenset(u for u in range(n) if colour[u] == i) for i in range(3)]
            if all(parts):
                yield CyclicalPartition(tuple(parts))
            return
        for c in range(3):
            colour[v] = c
            if consistent(v):
                yield from rec(v + 1)

    colour[0] = 0
    yield from rec(1)


def spanning_three_cycle_extension(d: Digraph) -> CyclicalPartition | None:
    return next(spanning_three_cycle_extensions(d), None)


def ug_two_edge_components(d: Digraph) -> list[frozenset[int]]:
    """Vertex sets of the maximal 2-edge-connected subgraphs of the underlying graph."""
    edges = underlying_edges(d)

    def components(edge_list):
        parent = list(range(d.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edge_list:
            parent[find(u)] = find(v)
        return [find(x) for x in range(d.n)]

    bridges = set()
    for e in edges:
        rest = [f for f in edges if f != e]
        comp = components(rest)
        if comp[e[0]] != comp[e[1]]:
            bridges.add(e)
    comp = components([e for e in edges if e not in bridges])
    groups: dict[int, set[int]] = {}
    for v in range(d.n):
        groups.setdefault(comp[v], set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _is_complete(d: Digraph) -> bool:
    return d.num_arcs == d.n * (d.n - 1)


def _exact_extension(d: Digraph) -> CyclicalPartition | None:
    for p in spanning_three_cycle_extensions(d):
        a, b, c = p.sizes()
        if d.num_arcs == a * b + b * c + c * a:
            return p
    return None


def _symmetric_restricted(d: Digraph, p: CyclicalPartition) -> bool:
    sym = arc_symmetry(d).symmetric_pairs
    if not sym:
        return False
    part_of = {v: i for i, part in enumerate(p.parts) for v in part}
    sizes = p.sizes()
    for pair in sym:
        u, v = tuple(pair)
        i, j = part_of[u], part_of[v]
        if (i + 1) % 3 == j or (j + 1) % 3 == i:
            first = i if (i + 1) % 3 == j else j
            second = (first + 1) % 3
            if sizes[first] != 1 and sizes[second] != 1:
                return False
    return True


def _clause3(d: Digraph, circ: int) -> CyclicalPartition | None:
    if circ != 3:
        return None
    for p in spanning_three_cycle_extensions(d):
        if _symmetric_restricted(d, p):
            return p
    return None


def _clause4(d: Digraph, circ: int):
    if circ != 3:
        return None
    comps = ug_two_edge_components(d)
    if len(comps) < 2:
        return None
    big = [c for c in comps if len(c) > 1]
    if len(big) != 1:
        return None
    core = sorted(big[0])
    pendants = sorted(v for c in comps if len(c) == 1 for v in c)
    sub = induced(d, core)
    has_sym = not arc_symmetry(sub).is_asymmetric
    for p in spanning_three_cycle_extensions(sub):
        # relabel to original vertex names; V0 is the part holding the anchor
        parts = [frozenset(core[i] for i in part) for part in p.parts]
        for shift in range(3):
            v0_part = parts[shift]
            if len(v0_part) != 1:
                continue
            (v0,) = v0_part
            if not all(d.has_arc(v0, u) and d.has_arc(u, v0) for u in pendants):
                continue
            rotated = CyclicalPartition(tuple(parts[(shift + t) % 3] for t in range(3)))
            local = CyclicalPartition(tuple(p.parts[(shift + t) % 3] for t in range(3)))
            if has_sym:
                ok = _symmetric_restricted(sub, local)
                core_clause = 3
            else:
                a, b, c = local.sizes()
                ok = sub.num_arcs == a * b + b * c + c * a
                core_clause = 2
            if ok:
                return rotated, v0, pendants, core_clause
    return None


def _biorientation_edges(d: Digraph):
    if not arc_symmetry(d).is_symmetric:
        return None
    return underlying_edges(d)


def _clause5(d: Digraph) -> bool:
    edges = _biorientation_edges(d)
    if edges is None or d.n != 5 or len(edges) != 5:
        return False
    deg = [0] * d.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return all(x == 2 for x in deg) and is_strong(d)


def _clause6(d: Digraph):
    edges = _biorientation_edges(d)
    if edges is None or d.n < 4 or len(edges) != d.n - 1:
        return None
    for c in range(d.n):
        if all(c in e for e in edges):
            return edges
    return None


def _clause7(d: Digraph):
    edges = _biorientation_edges(d)
    if edges is None or len(edges) != d.n - 1:
        return None
    try:
        return edges if tree_diameter(edges, d.n) == 3 else None
    except ValueError:
        return None


def matching_clauses(d: Digraph) -> list[int]:
    """All clauses 1..7 that D satisfies, plus 8 when none does and n <= 4."""
    circ = circumference(d)
    hits = []
    if _is_complete(d):
        hits.append(1)
    if _exact_extension(d) is not None:
        hits.append(2)
    if _clause3(d, circ) is not None:
        hits.append(3)
    if _clause4(d, circ) is not None:
        hits.append(4)
    if _clause5(d):
        hits.append(5)
    if _clause6(d) is not None:
        hits.append(6)
    if _clause7(d) is not None:
        hits.append(7)
    if not hits and d.n <= 4:
        hits.append(8)
    return hits


def classify_strong_4_transitive(d: Digraph) -> FamilyLabel | None:
    """Label of the first matching clause; None if no clause applies.

    A None result means the digraph escapes every family, which the totality
    checks report as a counterexample.
    """
    if not is_strong(d):
        raise PreconditionViolated("digraph is not strong")
    if not is_k_transitive(d, 4):
        raise PreconditionViolated("digraph is not 4-transitive")
    circ = circumference(d)
    if _is_complete(d):
        return FamilyLabel(1)
    p = _exact_extension(d)
    if p is not None:
        return FamilyLabel(2, {"partition": p.as_lists()})
    p = _clause3(d, circ)
    if p is not None:
        return FamilyLabel(3, {"partition": p.as_lists()})
    hit = _clause4(d, circ)
    if hit is not None:
        p, v0, pendants, core_clause = hit
        return FamilyLabel(4, {
            "partition": p.as_lists(),
            "anchor": v0,
            "pendants": pendants,
            "core_clause": core_clause,
            "interpretation": CLAUSE4_NOTE,
        })
    if _clause5(d):
        return FamilyLabel(5)
    edges = _clause6(d)
    if edges is not None:
        return FamilyLabel(6, {"edges": [list(e) for e in edges]})
    edges = _clause7(d)
    if edges is not None:
        return FamilyLabel(7, {"edges": [list(e) for e in edges]})
    if d.n <= 4:
        return FamilyLabel(8)
    return None
