import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dikernels.core import (
    UNREACHABLE,
    Digraph,
    arc_symmetry,
    complement,
    converse,
    delete_vertex,
    diameter,
    distances,
    empty_digraph,
    from_arcs,
    induced,
    is_strong,
    mask_of,
    members,
    permute,
)
from dikernels.errors import LoopArc, OrderTooLarge, VertexOutOfRange
from dikernels.families import directed_cycle, transitive_tournament

import oracles


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_arcs(n, chosen)


def test_masks_round_trip():
    assert mask_of([0, 2, 5], 6) == 0b100101
    assert members(0b100101) == frozenset({0, 2, 5})
    with pytest.raises(VertexOutOfRange):
        mask_of([6], 6)


def test_construction_errors():
    with pytest.raises(LoopArc):
        from_arcs(3, [(1, 1)])
    with pytest.raises(VertexOutOfRange):
        from_arcs(3, [(0, 3)])
    with pytest.raises(OrderTooLarge):
        empty_digraph(64)


def test_immutable_and_hashable():
    d = directed_cycle(4)
    with pytest.raises(AttributeError):
        d.n = 5
    assert hash(d) == hash(directed_cycle(4))
    assert d == from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert d.rows.flags.writeable is False


def test_neighbourhoods():
    d = transitive_tournament(4)
    assert d.out_neighbors(0) == frozenset({1, 2, 3})
    assert d.in_neighbors(3) == frozenset({0, 1, 2})
    assert d.num_arcs == 6
    assert d.adjacent(2, 0) and not d.has_arc(2, 0)


def test_induced_relabels_in_order():
    d = directed_cycle(5)
    h = induced(d, [4, 0, 1])
    assert h.n == 3
    assert h.arcs() == [(0, 1), (2, 0)]  # 0->1 and 4->0 under the map 0,1,4 -> 0,1,2
    assert delete_vertex(d, 0).arcs() == [(0, 1), (1, 2), (2, 3)]


@settings(max_examples=200, deadline=None)
@given(digraphs())
def test_distances_match_floyd_warshall(d):
    fw = oracles.floyd_warshall(oracles.arcset(d), d.n)
    dm = distances(d)
    for u in range(d.n):
        for v in range(d.n):
            want = UNREACHABLE if fw[u][v] == oracles.INF else fw[u][v]
            assert dm[u, v] == want
    strong = all(fw[u][v] < oracles.INF for u in range(d.n) for v in range(d.n))
    assert is_strong(d) == strong
    if strong:
        assert diameter(d) == max(max(r) for r in fw)


def test_shells_partition_in_distance():
    d = directed_cycle(5)
    dm = distances(d)
    assert dm.diameter == 4
    # S_i(v): vertices x with d(x, v) = i
    assert dm.shell(0, 1) == frozenset({4})
    assert dm.shell(0, 4) == frozenset({1})


@settings(max_examples=100, deadline=None)
@given(digraphs(), st.randoms(use_true_random=False))
def test_permute_complement_converse(d, rnd):
    perm = list(range(d.n))
    rnd.shuffle(perm)
    p = permute(d, perm)
    assert oracles.arcset(p) == {(perm[u], perm[v]) for u, v in oracles.arcset(d)}
    assert complement(complement(d)) == d
    assert converse(converse(d)) == d
    assert oracles.arcset(converse(d)) == {(v, u) for u, v in oracles.arcset(d)}


def test_arc_symmetry():
    d = from_arcs(3, [(0, 1), (1, 0), (1, 2)])
    s = arc_symmetry(d)
    assert s.symmetric_pairs == frozenset({frozenset({0, 1})})
    assert set(s.asymmetric_arcs) == {(1, 2)}
    assert not s.is_asymmetric and not s.is_symmetric
    assert arc_symmetry(directed_cycle(3)).is_asymmetric


def test_random_rows_roundtrip():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(1, 20)
        arcs = [(u, v) for u, v in itertools.permutations(range(n), 2) if rnd.random() < 0.3]
        d = from_arcs(n, arcs)
        assert Digraph(n, d.out_rows) == d
        assert sorted(arcs) == d.arcs()
