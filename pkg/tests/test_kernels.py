import itertools

import pytest
from hypothesis import given, settings

from dikernels.core import empty_digraph, from_arcs
from dikernels.errors import OrderTooLarge
from dikernels.families import antihole, biorient, c7_12, directed_cycle, star_edges
from dikernels.kernels import (
    KernelStatus,
    all_kernels,
    find_kernel,
    has_kernel,
    is_cki,
    is_kernel,
    is_kernel_perfect,
)

import oracles
from test_core import digraphs


@settings(max_examples=300, deadline=None)
@given(digraphs(7))
def test_kernel_engine_matches_subset_brute_force(d):
    arcs = oracles.arcset(d)
    want = sorted(oracles.brute_kernels(arcs, d.n), key=lambda s: sum(1 << v for v in s))
    got = all_kernels(d)
    assert got == want
    ans = find_kernel(d)
    assert ans.found == bool(want)
    if want:
        assert ans.status is KernelStatus.FOUND
        assert ans.witness == want[0]
    else:
        assert ans.witness is None
    assert has_kernel(d) == bool(want)
    for s in itertools.chain.from_iterable(itertools.combinations(range(d.n), r) for r in range(d.n + 1)):
        assert is_kernel(d, s) == oracles.brute_is_kernel(arcs, d.n, s)


@settings(max_examples=120, deadline=None)
@given(digraphs(6))
def test_perfection_and_criticality_match_brute_force(d):
    arcs = oracles.arcset(d)
    assert is_kernel_perfect(d) == oracles.brute_kernel_perfect(arcs, d.n)
    assert is_cki(d) == oracles.brute_cki(arcs, d.n)


def test_small_examples():
    assert find_kernel(directed_cycle(4)).witness == frozenset({0, 2})
    assert all_kernels(directed_cycle(6)) == [frozenset({0, 2, 4}), frozenset({1, 3, 5})]
    assert all_kernels(biorient(star_edges(3), 4)) == [frozenset({0}), frozenset({1, 2, 3})]
    assert all_kernels(empty_digraph(3)) == [frozenset({0, 1, 2})]
    assert not has_kernel(directed_cycle(3))


@pytest.mark.parametrize("n", range(3, 16))
def test_cycles(n):
    c = directed_cycle(n)
    assert is_cki(c) == (n % 2 == 1)
    assert is_kernel_perfect(c) == (n % 2 == 0)


@pytest.mark.parametrize("n", range(3, 9))
def test_antiholes_are_cki(n):
    assert is_cki(antihole(n))


def test_named_cki_and_empty():
    assert is_cki(c7_12())
    assert not is_cki(empty_digraph(0))
    assert is_kernel_perfect(empty_digraph(0))


def test_order_limits():
    big = directed_cycle(16)
    with pytest.raises(OrderTooLarge):
        is_kernel_perfect(big)
    with pytest.raises(OrderTooLarge):
        all_kernels(directed_cycle(21))
    # a single kernel query has no order limit below the container's
    assert find_kernel(directed_cycle(40)).found


def test_is_kernel_rejects_dependent_or_non_absorbent():
    d = from_arcs(3, [(0, 1), (1, 2)])
    assert is_kernel(d, {0, 2})
    assert not is_kernel(d, {0, 1})
    assert not is_kernel(d, {2})
