#!/usr/bin/env python3
"""
GF(2)线性代数测试
秩、零空间、矩阵向量乘以及1起始下标约定
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.codes.oracles import span_rank
from src.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InputFormatError,
    LimitExceededError,
    MatrixPreconditionError,
)
from src.gf2.linalg import (
    BitMatrix,
    BitVector,
    distinct_row_count,
    has_unit_diagonal,
    is_symmetric,
    mat_vec_mul,
    nullspace_basis,
    rank,
    row_weight,
    row_weights,
    select_rows,
    transpose,
)


@st.composite
def dense_matrices(draw, max_rows: int = 12, max_cols: int = 12):
    n_rows = draw(st.integers(1, max_rows))
    n_cols = draw(st.integers(1, max_cols))
    bits = draw(st.lists(st.integers(0, 1), min_size=n_rows * n_cols, max_size=n_rows * n_cols))
    return np.array(bits, dtype=np.uint8).reshape(n_rows, n_cols)


def test_rank_of_basic_matrices():
    """单位阵、零矩阵、全1矩阵"""
    assert rank(BitMatrix.identity(5)) == 5
    assert rank(BitMatrix.zeros(4, 7)) == 0
    assert rank(BitMatrix.ones(4, 4)) == 1
    assert rank(BitMatrix.identity(130)) == 130


def test_nullspace_of_all_ones_is_canonical():
    """K_4的Ā是全1矩阵：基向量按自由列升序"""
    basis = nullspace_basis(BitMatrix.ones(4, 4))
    assert [v.to_string() for v in basis] == ["1100", "1010", "1001"]


def test_nullspace_of_full_rank_is_empty():
    assert nullspace_basis(BitMatrix.identity(6)) == []


def test_mat_vec_mul():
    m = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    assert mat_vec_mul(m, BitVector.from_string("111")).to_string() == "00"
    assert mat_vec_mul(m, BitVector.from_string("100")).to_string() == "10"
    with pytest.raises(DimensionMismatchError):
        mat_vec_mul(m, BitVector.from_string("11"))


def test_indices_are_one_based():
    v = BitVector.from_string("0110")
    assert [v.bit(i) for i in range(1, 5)] == [0, 1, 1, 0]
    with pytest.raises(IndexOutOfRangeError):
        v.bit(0)
    with pytest.raises(IndexOutOfRangeError):
        v.bit(5)

    m = BitMatrix.from_rows([[1, 0], [1, 1]])
    assert m.get(2, 1) == 1 and m.get(1, 2) == 0
    assert m.row(2).to_string() == "11"
    assert row_weight(m, 2) == 2
    with pytest.raises(IndexOutOfRangeError):
        m.get(3, 1)


def test_vector_operations():
    a = BitVector.from_string("1010")
    b = BitVector.from_string("0110")
    assert (a ^ b).to_string() == "1100"
    assert a.weight() == 2
    assert (a ^ a).is_zero()
    assert BitVector.unit(5, 3).to_string() == "00100"
    assert BitVector.zeros(0).length == 0
    with pytest.raises(DimensionMismatchError):
        a ^ BitVector.from_string("1")
    with pytest.raises(InputFormatError):
        BitVector.from_string("10a")


def test_matrix_text_format():
    text = "2 3\n101\n011\n"
    m = BitMatrix.from_text(text)
    assert m.shape == (2, 3)
    assert m.to_text() == text
    with pytest.raises(InputFormatError):
        BitMatrix.from_text("2 3\n101\n")
    with pytest.raises(InputFormatError):
        BitMatrix.from_text("1 3\n1x1\n")


def test_square_preconditions():
    rect = BitMatrix.ones(2, 3)
    with pytest.raises(MatrixPreconditionError):
        has_unit_diagonal(rect)
    with pytest.raises(MatrixPreconditionError):
        is_symmetric(rect)
    assert has_unit_diagonal(BitMatrix.identity(70))
    assert not has_unit_diagonal(BitMatrix.from_rows([[1, 1], [1, 0]]))
    assert not is_symmetric(BitMatrix.from_rows([[1, 1], [0, 1]]))


def test_row_helpers():
    m = BitMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert distinct_row_count(m) == 2
    assert row_weights(m) == [2, 2, 1]
    assert select_rows(m, [3, 1]).to_dense().tolist() == [[0, 0, 1], [1, 1, 0]]
    assert transpose(m).to_dense().tolist() == [[1, 1, 0], [1, 1, 0], [0, 0, 1]]


def test_span_rank_refuses_large_inputs():
    with pytest.raises(LimitExceededError):
        span_rank(BitMatrix.identity(20))


def test_wide_matrix_crosses_word_boundary():
    rng = np.random.default_rng(7)
    dense = rng.integers(0, 2, size=(90, 150), dtype=np.uint8)
    m = BitMatrix.from_dense(dense)
    assert np.array_equal(m.to_dense(), dense)
    assert rank(m) == rank(transpose(m))
    basis = nullspace_basis(m)
    assert len(basis) == 150 - rank(m)
    assert all(mat_vec_mul(m, v).is_zero() for v in basis)


@hyp_settings(max_examples=200, deadline=None)
@given(dense_matrices())
def test_rank_matches_span_count(dense):
    """消元求秩与张成空间计数一致"""
    assert rank(BitMatrix.from_dense(dense)) == span_rank(BitMatrix.from_dense(dense))


@hyp_settings(max_examples=200, deadline=None)
@given(dense_matrices())
def test_rank_nullity(dense):
    """rank + nullity = 列数，基向量都在零空间中且线性无关"""
    m = BitMatrix.from_dense(dense)
    basis = nullspace_basis(m)
    assert rank(m) + len(basis) == m.n_cols
    assert all(mat_vec_mul(m, v).is_zero() for v in basis)
    if basis:
        assert rank(BitMatrix.from_vectors(basis)) == len(basis)
    assert rank(m) == rank(transpose(m))
    assert rank(m) <= distinct_row_count(m)


@hyp_settings(max_examples=200, deadline=None)
@given(dense_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_operations(dense, rnd):
    """行置换与行相加（GF(2)）不改变秩"""
    expected = rank(BitMatrix.from_dense(dense))

    order = list(range(dense.shape[0]))
    rnd.shuffle(order)
    permuted = dense[order]
    assert rank(BitMatrix.from_dense(permuted)) == expected

    if permuted.shape[0] >= 2:
        target, source = rnd.sample(range(permuted.shape[0]), 2)
        added = permuted.copy()
        added[target] ^= added[source]
        assert rank(BitMatrix.from_dense(added)) == expected
