"""
图上二元存储码模块
奇偶修复函数 c_v = Σ_{u∈N(v)} c_u 使码成为线性码，其校验矩阵即增广邻接矩阵Ā
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.config.settings import settings
from src.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    IsolatedVertexError,
    LimitExceededError,
    NonCodewordError,
    ParameterError,
)
from src.gf2.linalg import BitMatrix, BitVector, mat_vec_mul, nullspace_basis, rank
from src.graphs.model import Graph, augmented_adjacency, has_isolated_vertex, isolated_vertices, max_degree


@dataclass(frozen=True)
class StorageCode:
    """图G上的二元存储码 C_G"""

    graph: Graph
    parity: BitMatrix
    rank: int
    dimension: int
    rate: Fraction
    basis: Tuple[BitVector, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def locality(self) -> int:
        return max_degree(self.graph)


class CodeSummary(BaseModel):
    """码参数摘要（JSON导出）"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1, description="码长（顶点数）")
    r: int = Field(..., ge=0, description="局部性（最大度）")
    rank: int = Field(..., ge=1, description="rank(Ā)")
    dimension: int = Field(..., ge=0, description="码维数 n - rank")
    rate_num: int = Field(..., ge=0, description="码率分子")
    rate_den: int = Field(..., ge=1, description="码率分母")


def build_code(g: Graph) -> StorageCode:
    """
    由图构建存储码

    Args:
        g: 无孤立顶点的图

    Returns:
        StorageCode，码率为精确有理数 1 - rank(Ā)/n

    Raises:
        IsolatedVertexError: 存在孤立顶点
    """
    if has_isolated_vertex(g):
        raise IsolatedVertexError("存在孤立顶点 (isolated vertex)", str(isolated_vertices(g)))

    parity = augmented_adjacency(g)
    parity_rank = rank(parity)
    basis = tuple(nullspace_basis(parity))
    dimension = g.n - parity_rank
    if dimension != len(basis):
        raise RuntimeError(f"秩-零化度不一致: rank={parity_rank}, 零空间维数={len(basis)}, n={g.n}")

    return StorageCode(
        graph=g,
        parity=parity,
        rank=parity_rank,
        dimension=dimension,
        rate=Fraction(dimension, g.n),
        basis=basis,
    )


def code_summary(code: StorageCode) -> CodeSummary:
    return CodeSummary(
        n=code.n,
        r=code.locality,
        rank=code.rank,
        dimension=code.dimension,
        rate_num=code.rate.numerator,
        rate_den=code.rate.denominator,
    )


def _require_length(code: StorageCode, v: BitVector, what: str) -> None:
    if v.length != code.n:
        raise DimensionMismatchError(f"{what}长度必须等于n (dimension mismatch)", f"{v.length} vs {code.n}")


def is_codeword(code: StorageCode, c: BitVector) -> bool:
    """c是码字 ⇔ 每个顶点的比特等于其邻居比特之和 ⇔ Ā·c = 0"""
    _require_length(code, c, "码字")
    return mat_vec_mul(code.parity, c).is_zero()


def _basis_array(code: StorageCode) -> np.ndarray:
    """生成矩阵（每行一个基向量），要求维数 ≥ 1"""
    return BitMatrix.from_vectors(code.basis).to_dense().astype(np.int64)


def enumerate_codewords(code: StorageCode, limit: int) -> List[BitVector]:
    """
    枚举全部 2^dimension 个码字

    消息按字典序排列（第1位为最高位），第k个码字为对应消息的编码结果。

    Args:
        code: 存储码
        limit: 调用方允许的码字数上限

    Raises:
        LimitExceededError: 2^dimension > limit，应改用抽样
    """
    if limit < 1:
        raise ParameterError("枚举上限必须为正", str(limit))
    count = 1 << code.dimension
    if count > limit:
        raise LimitExceededError(
            "码字数量超过上限 (limit exceeded)",
            f"2^{code.dimension} = {count} > {limit}",
        )

    k = code.dimension
    if k == 0:
        return [BitVector.zeros(code.n)]

    indices = np.arange(count, dtype=np.int64)
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    messages = (indices[:, None] >> shifts[None, :]) & 1
    codewords = (messages @ _basis_array(code)) & 1
    return [BitVector.from_bits(row) for row in codewords]


def encode(code: StorageCode, message: BitVector) -> BitVector:
    """按消息比特选取基向量并求和（GF(2)）"""
    if message.length != code.dimension:
        raise DimensionMismatchError(
            "消息长度必须等于码维数 (dimension mismatch)",
            f"{message.length} vs {code.dimension}",
        )
    codeword = BitVector.zeros(code.n)
    for index, basis_vector in enumerate(code.basis, start=1):
        if message.bit(index):
            codeword = codeword ^ basis_vector
    return codeword


def repair(
    code: StorageCode,
    stored: BitVector,
    failed: int,
    *,
    checked: Optional[bool] = None,
    on_query: Optional[Callable[[int], None]] = None,
) -> int:
    """
    单符号奇偶修复：返回失效顶点邻居比特之和

    只读取N(failed)中的位置；每读一个位置调用一次on_query。
    非检查模式下信任输入（真实修复看不到失效符号）。

    Args:
        code: 存储码
        stored: 当前存储内容
        failed: 失效顶点（从1开始）
        checked: 是否先校验stored是码字，None时取配置
        on_query: 查询回调，参数为被查询的顶点

    Returns:
        修复出的比特

    Raises:
        IndexOutOfRangeError: 顶点越界
        NonCodewordError: 检查模式下stored不是码字
    """
    _require_length(code, stored, "存储内容")
    if not 1 <= failed <= code.n:
        raise IndexOutOfRangeError("失效顶点越界 (index out of range)", f"{failed} ∉ [1, {code.n}]")

    if checked is None:
        checked = settings.checked_repair
    if checked and not is_codeword(code, stored):
        raise NonCodewordError("存储内容不是码字 (non-codeword)", stored.to_string())

    value = 0
    for u in code.graph.neighbors(failed):
        if on_query is not None:
            on_query(u)
        value ^= stored.bit(u)
    return value
