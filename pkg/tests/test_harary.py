import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_min_cut, components
from resistnet.designer import build_s0, interleaved_order
from resistnet.graph import TwoLayerNetwork, edge_connectivity
from resistnet.harary import DuplicateEdge, harary_edge_count, harary_edges, overlay


def as_net(n, edges):
    return TwoLayerNetwork.from_edges(1, n - 1, nonprotected=edges)


@pytest.mark.parametrize("n, degree, expected", [(5, 3, 8), (7, 4, 14), (5, 2, 5), (6, 5, 15)])
def test_edge_counts(n, degree, expected):
    assert len(harary_edges(range(1, n + 1), degree)) == expected


def test_four_cycle():
    assert set(harary_edges([1, 2, 3, 4], 2)) == {(1, 2), (2, 3), (3, 4), (1, 4)}


def test_n9_degree4_connectivity_brute_force():
    net = as_net(9, harary_edges(range(1, 10), 4))
    # brute-force oracle over cut subsets, every pair anchored at node 1
    assert min(brute_min_cut(net, 1, t, 4) for t in range(2, 10)) == 4
    assert edge_connectivity(net) == 4


def test_sequence_relative():
    seq = [10, 3, 7, 1, 8]
    edges = harary_edges(seq, 2)
    assert set(edges) == {(3, 10), (3, 7), (1, 7), (1, 8), (8, 10)}


@pytest.mark.parametrize("seq, degree", [([1], 1), ([1, 2, 3], 3), ([1, 2, 2], 1), ([1, 2, 3], 0)])
def test_rejects(seq, degree):
    with pytest.raises(ValueError):
        harary_edges(seq, degree)


@given(st.integers(2, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_count_and_degree_property(nd):
    n, degree = nd
    edges = harary_edges(range(n), degree)
    assert len(edges) == harary_edge_count(n, degree) == -(-degree * n // 2)
    deg = Counter(v for e in edges for v in e)
    assert all(deg[i] in (degree, degree + 1) for i in range(n))
    extra = sum(1 for i in range(n) if deg[i] == degree + 1)
    if degree * n % 2 == 0:
        assert extra == 0
    else:
        assert extra == 1


@pytest.mark.parametrize("n", range(3, 13))
def test_connectivity_equals_degree(n):
    for degree in range(2, n):
        assert edge_connectivity(as_net(n, harary_edges(range(1, n + 1), degree))) == degree


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_degree_one_is_a_matching(n):
    # ceil(n/2) edges cannot connect n >= 4 nodes
    edges = harary_edges(range(1, n + 1), 1)
    assert len(edges) == -(-n // 2)
    assert len(set(components(n, edges)[1:])) > 1


@pytest.mark.parametrize("n", range(3, 10))
def test_survives_all_k_removals(n):
    for k in range(1, min(3, n - 2) + 1):
        edges = harary_edges(range(1, n + 1), k + 1)
        for attack in itertools.combinations(edges, k):
            keep = [e for e in edges if e not in attack]
            assert len(set(components(n, keep)[1:])) == 1


def test_overlay():
    assert overlay({(1, 2)}, {(3, 2)}) == {(1, 2), (2, 3)}
    with pytest.raises(DuplicateEdge):
        overlay({(1, 2)}, {(2, 1)})


def test_s0_6_2_1_2_overlay_disjoint():
    order = interleaved_order(6, 2, 1)
    assert order == [1, 7, 2, 8, 3, 4, 5, 6]
    base = set(harary_edges(order, 2))
    extra = set(harary_edges([7, 8], 1))
    assert not base & extra
    assert all(not (u > 6 and v > 6) for u, v in base)


def test_s0_overlay_disjoint_sweep():
    built = 0
    for n1 in range(1, 16):
        for n2 in range(1, 5):
            for k1 in (1, 3, 5, 7):
                for k2 in range(k1, k1 + n2):
                    if n2 * (k1 + 1) > 2 * n1 or k1 + 2 > n1 + n2:
                        continue
                    order = interleaved_order(n1, n2, k1)
                    base = harary_edges(order, k1 + 1)
                    assert all(not (u > n1 and v > n1) for u, v in base)
                    if k2 > k1:
                        overlay(base, harary_edges(list(range(n1 + 1, n1 + n2 + 1)), k2 - k1))
                    build_s0(n1, n2, k1, k2)
                    built += 1
    assert built > 200
