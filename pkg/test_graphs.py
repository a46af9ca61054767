#!/usr/bin/env python3
"""
图模型与文本格式测试
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.errors import DimensionMismatchError, IndexOutOfRangeError, InputFormatError, InvalidGraphError
from src.fileio.formats import format_edge_list, format_graph, parse_codeword, parse_edge_list
from src.gf2.linalg import has_unit_diagonal, is_symmetric, row_weights
from src.graphs.model import (
    Graph,
    augmented_adjacency,
    connected_components,
    from_edge_list,
    is_connected,
    has_isolated_vertex,
    isolated_vertices,
    max_degree,
    to_dot,
    to_networkx,
)


def test_edge_list_normalizes_and_dedups():
    g = from_edge_list(4, [(2, 1), (1, 2), (3, 4)])
    assert g.edges() == [(1, 2), (3, 4)]
    assert g.edge_count == 2
    assert g.neighbors(1) == (2,)
    assert g.degrees() == [1, 1, 1, 1]


def test_invalid_graphs():
    with pytest.raises(InvalidGraphError):
        from_edge_list(3, [(2, 2)])
    with pytest.raises(InvalidGraphError):
        from_edge_list(3, [(1, 4)])
    with pytest.raises(InvalidGraphError):
        Graph(2, [{2}, set()])
    with pytest.raises(IndexOutOfRangeError):
        from_edge_list(2, [(1, 2)]).neighbors(3)


def test_augmented_adjacency_of_path():
    a = augmented_adjacency(from_edge_list(3, [(1, 2), (2, 3)]))
    assert a.to_dense().tolist() == [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
    assert is_symmetric(a) and has_unit_diagonal(a)


def test_structure_queries():
    g = from_edge_list(5, [(1, 2), (2, 3), (4, 5)])
    assert max_degree(g) == 2
    assert not is_connected(g)
    assert connected_components(g) == [(1, 2, 3), (4, 5)]
    assert isolated_vertices(g) == []
    assert not has_isolated_vertex(g)
    assert to_networkx(g).number_of_edges() == 3

    lonely = from_edge_list(3, [(1, 2)])
    assert isolated_vertices(lonely) == [3]
    assert has_isolated_vertex(lonely)


def test_dot_export():
    dot = to_dot(from_edge_list(3, [(1, 2)]))
    assert dot == "graph G {\n  1 -- 2;\n  3;\n}\n"


def test_edge_list_text_round_trip():
    text = "# path\n3 2\n\n1 2\n2 3  # tail\n"
    g = parse_edge_list(text)
    assert g.edges() == [(1, 2), (2, 3)]
    assert format_edge_list(g) == "3 2\n1 2\n2 3\n"
    assert format_graph(g, "dot").startswith("graph G {")


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n1 2\n", "3 1\n1 x\n", "0 0\n", "3 1\n1 2 3\n"],
)
def test_edge_list_parse_errors(text):
    with pytest.raises(InputFormatError):
        parse_edge_list(text)


def test_edge_list_rejects_self_loop():
    with pytest.raises(InvalidGraphError):
        parse_edge_list("2 1\n1 1\n")


def test_codeword_text():
    assert parse_codeword("0110\n", 4).to_string() == "0110"
    with pytest.raises(DimensionMismatchError):
        parse_codeword("011", 4)
    with pytest.raises(InputFormatError):
        parse_codeword("01a0", 4)


def test_row_weights_track_degrees():
    g = from_edge_list(5, [(1, 2), (2, 3), (2, 4), (4, 5)])
    a = augmented_adjacency(g)
    assert row_weights(a) == [d + 1 for d in g.degrees()]
    assert all(2 <= w <= max_degree(g) + 1 for w in row_weights(a))


def test_single_vertex_is_isolated():
    assert has_isolated_vertex(from_edge_list(1, []))
    assert isolated_vertices(from_edge_list(1, [])) == [1]
    assert isolated_vertices(from_edge_list(2, [(1, 2)])) == []
    assert augmented_adjacency(from_edge_list(2, [(1, 2)])).to_dense().tolist() == [[1, 1], [1, 1]]


def test_edge_list_reports_first_bad_edge():
    with pytest.raises(InvalidGraphError, match="self-loop"):
        from_edge_list(3, [(1, 2), (3, 3), (1, 9)])
    with pytest.raises(InvalidGraphError, match="9 ∉"):
        from_edge_list(3, [(1, 2), (1, 9), (3, 3)])
    with pytest.raises(InvalidGraphError, match="0 ∉"):
        from_edge_list(3, [(0, 2)])


sized_edge_lists = st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(1, n), st.integers(1, n))))
)


@hyp_settings(max_examples=100, deadline=None)
@given(sized_edge_lists)
def test_edge_list_matches_validated_graph(case):
    """向量化构建与逐条校验的构造函数给出同一个图"""
    n, raw_edges = case
    edges = [(u, v) for u, v in raw_edges if u != v]
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u - 1].add(v)
        adjacency[v - 1].add(u)
    built = from_edge_list(n, edges)
    assert built == Graph(n, adjacency)
    assert all(isinstance(u, int) for nbrs in built.adjacency for u in nbrs)
    dense = augmented_adjacency(built).to_dense()
    assert dense.tolist() == augmented_adjacency(Graph(n, adjacency)).to_dense().tolist()
    assert dense.sum() == n + 2 * built.edge_count
