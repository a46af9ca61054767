"""
暴力校验模块
与消元无关的独立算法，用于小规模交叉验证
"""

from typing import List

import numpy as np

from src.errors import LimitExceededError
from src.gf2.linalg import BitMatrix, BitVector
from src.graphs.model import Graph

MAX_BRUTE_FORCE_BITS = 20
_CHUNK_BITS = 16


def span_rank(m: BitMatrix, max_rows: int = 16) -> int:
    """
    通过张成空间计数求秩：|rowspan| = 2^rank

    Raises:
        LimitExceededError: 行数超过max_rows
    """
    if m.n_rows > max_rows:
        raise LimitExceededError("暴力求秩的行数过多 (limit exceeded)", f"{m.n_rows} > {max_rows}")
    span = {0}
    for row in m.to_dense():
        value = int("".join(str(b) for b in row), 2)
        span |= {s ^ value for s in span}
    return len(span).bit_length() - 1


def exhaustive_codewords(g: Graph) -> List[BitVector]:
    """
    穷举{0,1}^n，保留满足每个顶点奇偶约束 c_v = Σ_{u∈N(v)} c_u 的向量

    结果按码字字符串的字典序排列。

    Raises:
        LimitExceededError: n超过MAX_BRUTE_FORCE_BITS
    """
    n = g.n
    if n > MAX_BRUTE_FORCE_BITS:
        raise LimitExceededError("穷举规模过大 (limit exceeded)", f"n={n} > {MAX_BRUTE_FORCE_BITS}")

    adjacency = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        adjacency[u - 1, v - 1] = adjacency[v - 1, u - 1] = 1

    # 第1位为最高位，使结果天然按字典序
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    found: List[BitVector] = []
    total = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, chunk):
        indices = np.arange(start, min(start + chunk, total), dtype=np.int64)
        vectors = (indices[:, None] >> shifts[None, :]) & 1
        repaired = (vectors @ adjacency.T) & 1
        keep = (repaired == vectors).all(axis=1)
        found.extend(BitVector.from_bits(row) for row in vectors[keep])
    return found
