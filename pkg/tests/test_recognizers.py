import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dikernels.core import from_arcs, permute
from dikernels.errors import LengthOutOfRange
from dikernels.families import antihole, c7_12, circulant, directed_cycle, transitive_tournament
from dikernels.recognizers import (
    NeighborhoodMode,
    are_isomorphic,
    canonical_digraph,
    canonical_form,
    circumference,
    contains_induced,
    contains_subdigraph_tt3,
    has_k_path,
    is_arc_locally_semicomplete,
    is_asymmetric,
    is_k_anti_transitive,
    is_k_quasi_transitive,
    is_k_transitive,
    is_locally_semicomplete,
    is_semicomplete,
    is_underlying_perfect,
    three_cycles_have_two_symmetric_arcs,
)

import oracles
from test_core import digraphs


def _semi(arcs, s):
    return all((u, v) in arcs or (v, u) in arcs for u, v in itertools.combinations(s, 2))


@settings(max_examples=150, deadline=None)
@given(digraphs(6), st.integers(2, 5))
def test_k_path_predicates_match_brute_force(d, k):
    arcs = oracles.arcset(d)
    ends = oracles.brute_k_paths(arcs, d.n, k)
    assert is_k_quasi_transitive(d, k) == all((u, v) in arcs or (v, u) in arcs for u, v in ends)
    assert is_k_transitive(d, k) == all((u, v) in arcs for u, v in ends)
    assert is_k_anti_transitive(d, k) == all((u, v) not in arcs for u, v in ends)
    if k <= d.n - 1:
        for u, v in itertools.permutations(range(d.n), 2):
            assert has_k_path(d, u, v, k) == ((u, v) in ends)


def test_k_path_length_bounds():
    with pytest.raises(LengthOutOfRange):
        has_k_path(directed_cycle(4), 0, 1, 4)
    with pytest.raises(LengthOutOfRange):
        has_k_path(directed_cycle(4), 0, 0, 2)
    # a 3-cycle has 2-paths only between consecutive vertices the wrong way
    assert has_k_path(directed_cycle(3), 0, 2, 2)


@settings(max_examples=150, deadline=None)
@given(digraphs(6))
def test_local_semicompleteness_matches_definition(d):
    arcs = oracles.arcset(d)
    n = d.n
    out_ = [{v for v in range(n) if (u, v) in arcs} for u in range(n)]
    in_ = [{v for v in range(n) if (v, u) in arcs} for u in range(n)]
    assert is_semicomplete(d) == _semi(arcs, range(n))
    assert is_asymmetric(d) == all((v, u) not in arcs for u, v in arcs)
    lin = all(_semi(arcs, in_[v]) for v in range(n))
    lout = all(_semi(arcs, out_[v]) for v in range(n))
    assert is_locally_semicomplete(d, NeighborhoodMode.IN) == lin
    assert is_locally_semicomplete(d, NeighborhoodMode.OUT) == lout
    assert is_locally_semicomplete(d, NeighborhoodMode.BOTH) == (lin and lout)
    closed = all(_semi(arcs, in_[v] | out_[v]) for v in range(n))
    assert is_locally_semicomplete(d, NeighborhoodMode.CLOSED) == closed

    def arc_local(nb):
        for x, y in arcs:
            for a in nb[x]:
                for b in nb[y]:
                    if a != b and (a, b) not in arcs and (b, a) not in arcs:
                        return False
        return True

    assert is_arc_locally_semicomplete(d, NeighborhoodMode.IN) == arc_local(in_)
    assert is_arc_locally_semicomplete(d, NeighborhoodMode.OUT) == arc_local(out_)
    assert is_arc_locally_semicomplete(d, NeighborhoodMode.BOTH) == (arc_local(in_) and arc_local(out_))


def test_c7_12_local_modes():
    d = c7_12()
    assert is_locally_semicomplete(d, NeighborhoodMode.BOTH)
    assert not is_locally_semicomplete(d, NeighborhoodMode.CLOSED)


def _nx(d):
    g = nx.DiGraph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.arcs())
    return g


@settings(max_examples=100, deadline=None)
@given(digraphs(7), digraphs(4))
def test_induced_containment_matches_networkx(d, h):
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(_nx(d), _nx(h))
    want = matcher.subgraph_is_isomorphic()
    got = contains_induced(d, h)
    assert (got is not None) == want
    if got is not None:
        assert sorted(got) == list(range(h.n))
        for a, b in itertools.permutations(range(h.n), 2):
            assert d.has_arc(got[a], got[b]) == h.has_arc(a, b)


def test_induced_examples():
    assert contains_induced(antihole(5), antihole(4)) is None
    assert contains_induced(c7_12(), directed_cycle(3)) is None
    assert contains_induced(transitive_tournament(4), transitive_tournament(3)) is not None


@settings(max_examples=150, deadline=None)
@given(digraphs(6))
def test_tt3_and_symmetric_three_cycles(d):
    arcs = oracles.arcset(d)
    tt3 = any((a, b) in arcs and (b, c) in arcs and (a, c) in arcs
              for a, b, c in itertools.permutations(range(d.n), 3))
    assert contains_subdigraph_tt3(d) == tt3
    ok = True
    for a, b, c in itertools.permutations(range(d.n), 3):
        if (a, b) in arcs and (b, c) in arcs and (c, a) in arcs:
            sym = sum((y, x) in arcs for x, y in ((a, b), (b, c), (c, a)))
            ok &= sym >= 2
    assert three_cycles_have_two_symmetric_arcs(d) == ok


def _perfect_by_definition(d):
    g = nx.Graph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from((u, v) for u, v in d.arcs())
    for r in range(1, d.n + 1):
        for s in itertools.combinations(range(d.n), r):
            h = g.subgraph(s)
            omega = max(len(c) for c in nx.find_cliques(h))
            chi = next(k for k in range(1, r + 1)
                       if any(all(col[u] != col[v] for u, v in h.edges())
                              for col in (dict(zip(s, c)) for c in itertools.product(range(k), repeat=r))))
            if omega != chi:
                return False
    return True


@settings(max_examples=40, deadline=None)
@given(digraphs(6))
def test_underlying_perfect_matches_clique_colouring(d):
    assert is_underlying_perfect(d) == _perfect_by_definition(d)


def test_underlying_perfect_examples():
    assert not is_underlying_perfect(directed_cycle(5))
    assert not is_underlying_perfect(circulant(7, {2, 3}))  # underlying graph is the complement of C_7
    assert is_underlying_perfect(antihole(7))  # underlying graph is complete
    assert is_underlying_perfect(directed_cycle(6))
    assert is_underlying_perfect(antihole(4))


@settings(max_examples=100, deadline=None)
@given(digraphs(6))
def test_circumference(d):
    arcs = oracles.arcset(d)
    best = 0
    for r in range(2, d.n + 1):
        for seq in itertools.permutations(range(d.n), r):
            if seq[0] == min(seq) and all((seq[i], seq[(i + 1) % r]) in arcs for i in range(r)):
                best = max(best, r)
    assert circumference(d) == best


@settings(max_examples=150, deadline=None)
@given(digraphs(6), digraphs(6), st.randoms(use_true_random=False))
def test_canonical_form_decides_isomorphism(d, h, rnd):
    perm = list(range(d.n))
    rnd.shuffle(perm)
    p = permute(d, perm)
    assert canonical_form(p) == canonical_form(d)
    assert canonical_digraph(p) == canonical_digraph(d)
    assert are_isomorphic(d, p)
    want = oracles.brute_isomorphic(oracles.arcset(d), d.n, oracles.arcset(h), h.n)
    assert are_isomorphic(d, h) == want


def test_canonical_classes_match_brute_minimum_code():
    # the canonical code is not the lexicographic minimum, but it must induce the same partition
    n = 4
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    ours, brute = {}, {}
    for mask in range(0, 1 << len(pairs), 7):
        arcs = {p for t, p in enumerate(pairs) if mask >> t & 1}
        d = from_arcs(n, arcs)
        ours.setdefault(canonical_form(d), set()).add(mask)
        brute.setdefault(oracles.brute_canonical(arcs, n), set()).add(mask)
    assert sorted(map(sorted, ours.values())) == sorted(map(sorted, brute.values()))


def test_cycle_and_circulant_isomorphisms():
    assert are_isomorphic(circulant(5, {1}), circulant(5, {2}))
    assert not are_isomorphic(directed_cycle(3), transitive_tournament(3))
