#!/usr/bin/env python3
"""
图族构造测试
团划分与链式构造的分块方案、边集和结构性质
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.errors import ParameterError
from src.gf2.linalg import distinct_row_count, rank, select_rows
from src.graphs.constructions import (
    chain_index_set,
    chain_partition_plan,
    clique_partition,
    complete,
    connected_chain,
    part_count,
    partition_plan,
    random_bounded_degree,
)
from src.graphs.model import (
    Graph,
    augmented_adjacency,
    connected_components,
    from_edge_list,
    is_connected,
    isolated_vertices,
    max_degree,
)

RUN_SLOW = os.getenv("STORAGE_CODES_RUN_SLOW") == "1"


def _clique_edges(vertices):
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]


def _chain_block(vertices):
    return [pair for pair in _clique_edges(vertices) if pair != (vertices[0], vertices[-1])]


def test_partition_plan_sizes():
    assert partition_plan(19, 5).sizes == [6, 6, 5, 2]
    assert partition_plan(23, 5).sizes == [6, 6, 6, 5]
    assert partition_plan(12, 3).sizes == [4, 4, 4]
    assert chain_partition_plan(9, 3).sizes == [4, 4, 1]
    assert partition_plan(19, 5).p == part_count(19, 5) == 4


@pytest.mark.parametrize("n, r", [(1, 2), (5, 1), (5, 5), (5, 10)])
def test_invalid_locality(n, r):
    with pytest.raises(ParameterError):
        clique_partition(n, r)


def test_clique_partition_components():
    assert [len(c) for c in connected_components(clique_partition(19, 5))] == [6, 6, 5, 2]
    assert [len(c) for c in connected_components(clique_partition(23, 5))] == [6, 6, 6, 5]
    g = clique_partition(19, 5)
    assert g.neighbors(18) == (19,)
    assert max_degree(g) == 5


def test_complete_graph():
    g = complete(4)
    assert g.edge_count == 6
    assert rank(augmented_adjacency(g)) == 1
    with pytest.raises(ParameterError):
        complete(1)


def test_chain_fixture_9_3():
    expected = sorted(_chain_block([1, 2, 3, 4]) + _chain_block([5, 6, 7, 8]) + [(4, 5), (8, 9)])
    assert connected_chain(9, 3).edges() == expected


def test_chain_fixture_10_3():
    expected = sorted(
        _chain_block([1, 2, 3, 4]) + _chain_block([5, 6, 7, 8]) + [(4, 5), (8, 9), (9, 10)]
    )
    assert connected_chain(10, 3).edges() == expected


def test_chain_fixture_11_3():
    expected = sorted(
        _chain_block([1, 2, 3, 4]) + _chain_block([5, 6, 7, 8]) + _chain_block([9, 10, 11]) + [(4, 5), (8, 9)]
    )
    assert connected_chain(11, 3).edges() == expected


def test_chain_fixture_12_3():
    expected = sorted(
        _chain_block([1, 2, 3, 4])
        + _chain_block([5, 6, 7, 8])
        + _chain_block([9, 10, 11, 12])
        + [(4, 5), (8, 9)]
    )
    g = connected_chain(12, 3)
    assert g.edges() == expected
    assert is_connected(g)
    assert max_degree(g) == 3


def _check_chain(n, r):
    g = connected_chain(n, r)
    a = augmented_adjacency(g)
    assert is_connected(g)
    assert max_degree(g) <= r
    assert not isolated_vertices(g)
    index_set = chain_index_set(n, r)
    assert len(index_set) <= 3 * part_count(n, r)
    # Ā中每一行都与I中的某一行相同
    kept = {a.row(i) for i in index_set}
    assert all(a.row(v) in kept for v in range(1, n + 1))
    assert rank(a) <= rank(select_rows(a, list(index_set))) <= 3 * part_count(n, r)


@hyp_settings(max_examples=150, deadline=None)
@given(st.integers(3, 120).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))))
def test_chain_properties(pair):
    _check_chain(*pair)


@hyp_settings(max_examples=150, deadline=None)
@given(st.integers(3, 120).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))))
def test_clique_partition_properties(pair):
    n, r = pair
    g = clique_partition(n, r)
    assert max_degree(g) <= r
    assert not isolated_vertices(g)
    assert len(connected_components(g)) == part_count(n, r)
    plan = partition_plan(n, r)
    edges = [e for k in range(1, plan.p + 1) for e in _clique_edges(plan.vertices(k))]
    assert g == from_edge_list(n, edges)
    assert Graph(n, g.adjacency) == g


@pytest.mark.skipif(not RUN_SLOW, reason="设置 STORAGE_CODES_RUN_SLOW=1 运行完整网格")
def test_chain_full_grid():
    for n in range(3, 201):
        for r in range(2, n):
            _check_chain(n, r)


@pytest.mark.parametrize("n, r, seed", [(3, 2, 0), (7, 2, 1), (50, 4, 2), (101, 10, 3)])
def test_random_bounded_degree(n, r, seed):
    g = random_bounded_degree(n, r, seed)
    assert max_degree(g) <= r
    assert not isolated_vertices(g)
    assert random_bounded_degree(n, r, seed) == g
    assert Graph(n, g.adjacency) == g


def test_single_part_plans():
    assert partition_plan(6, 5).sizes == [6]
    g = clique_partition(7, 6)
    assert g == complete(7)
    assert rank(augmented_adjacency(g)) == 1


def test_clique_partition_23_5_degrees():
    g = clique_partition(23, 5)
    assert set(g.degrees()) == {4, 5}
    assert distinct_row_count(augmented_adjacency(g)) == 4
