"""
图族构造模块
团划分图（达到容量下界）、链式近团图（连通版本）、完全图以及有界度随机图
"""

import math
from itertools import combinations
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import ParameterError
from src.graphs.model import Edge, Graph, from_edge_list


class PartitionPlan(BaseModel):
    """顶点集合[n]的连续区间划分 V_1..V_p"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1, description="顶点数")
    r: int = Field(..., ge=1, description="局部性")
    parts: Tuple[Tuple[int, int], ...] = Field(..., min_length=1, description="闭区间(起点, 终点)列表")

    @model_validator(mode="after")
    def validate_cover(self) -> "PartitionPlan":
        """验证区间连续、不相交且按顺序覆盖1..n"""
        expected_start = 1
        for start, end in self.parts:
            if start != expected_start or end < start:
                raise ValueError(f"划分区间不连续: ({start}, {end})，期望起点{expected_start}")
            if end - start + 1 > self.r + 1:
                raise ValueError(f"划分块({start}, {end})超过r+1={self.r + 1}个顶点")
            expected_start = end + 1
        if expected_start != self.n + 1:
            raise ValueError(f"划分未覆盖全部顶点: 终止于{expected_start - 1}，n={self.n}")
        return self

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> List[int]:
        return [end - start + 1 for start, end in self.parts]

    def vertices(self, index: int) -> List[int]:
        """第index块（从1开始）的顶点"""
        start, end = self.parts[index - 1]
        return list(range(start, end + 1))


def part_count(n: int, r: int) -> int:
    """p = ⌈n/(r+1)⌉"""
    return -(-n // (r + 1))


def validate_locality(n: int, r: int) -> None:
    """
    校验 n ≥ 2 且 2 ≤ r ≤ n-1

    Raises:
        ParameterError: 参数越界
    """
    if n < 2:
        raise ParameterError("顶点数必须满足 n ≥ 2", f"n={n}")
    if not 2 <= r <= n - 1:
        raise ParameterError("局部性必须满足 2 ≤ r ≤ n-1", f"n={n}, r={r}")


def _plan_from_sizes(n: int, r: int, sizes: List[int]) -> PartitionPlan:
    parts = []
    start = 1
    for size in sizes:
        parts.append((start, start + size - 1))
        start += size
    return PartitionPlan(n=n, r=r, parts=tuple(parts))


def partition_plan(n: int, r: int) -> PartitionPlan:
    """
    团划分的分块方案

    n mod (r+1) ≠ 1 时：前p-1块大小为r+1，最后一块为余下顶点；
    n mod (r+1) = 1 时：前p-2块大小为r+1，接着一块大小为r，最后一块大小为2。
    因此不会出现大小为1的块。

    Args:
        n: 顶点数
        r: 局部性

    Returns:
        PartitionPlan，p = ⌈n/(r+1)⌉
    """
    validate_locality(n, r)
    p = part_count(n, r)
    if n % (r + 1) == 1:
        sizes = [r + 1] * (p - 2) + [r, 2]
    else:
        sizes = [r + 1] * (p - 1) + [n - (p - 1) * (r + 1)]
    return _plan_from_sizes(n, r, sizes)


def chain_partition_plan(n: int, r: int) -> PartitionPlan:
    """链式构造的分块：大小r+1,...,r+1,余数（余数可能为1）"""
    validate_locality(n, r)
    p = part_count(n, r)
    sizes = [r + 1] * (p - 1) + [n - (p - 1) * (r + 1)]
    return _plan_from_sizes(n, r, sizes)


def clique_partition(n: int, r: int) -> Graph:
    """
    不相交团的并：同一分块内的任意两个顶点相连

    Ā的秩恰为p，码率为 1 - ⌈n/(r+1)⌉/n。
    """
    plan = partition_plan(n, r)
    adjacency: List[Tuple[int, ...]] = []
    for start, end in plan.parts:
        block = tuple(range(start, end + 1))
        adjacency.extend(block[:k] + block[k + 1 :] for k in range(len(block)))
    return Graph.trusted(n, adjacency)


def connected_chain(n: int, r: int) -> Graph:
    """
    连通构造：每块是去掉首尾顶点之间那条边的团，相邻块通过桥边相连

    末块处理：
    - |V_p| ≥ 3：去掉(首, 尾)边的团
    - |V_p| = 2：连接块内两个顶点
    - |V_p| = 1：只靠桥边((p-1)(r+1), n)连接

    Ā的秩不超过3p。
    """
    plan = chain_partition_plan(n, r)
    edges: List[Edge] = []
    for index in range(1, plan.p + 1):
        block = plan.vertices(index)
        if len(block) >= 3:
            first, last = block[0], block[-1]
            edges.extend(pair for pair in combinations(block, 2) if pair != (first, last))
        elif len(block) == 2:
            edges.append((block[0], block[1]))

    # 桥边 (i(r+1), i(r+1)+1)
    edges.extend((i * (r + 1), i * (r + 1) + 1) for i in range(1, plan.p))
    return from_edge_list(n, edges)


def chain_index_set(n: int, r: int) -> Tuple[int, ...]:
    """
    链式构造的代表行集合I（|I| ≤ 3p）

    Ā中任何不在I中的行都与I中某一行完全相同，因此 rank(Ā) ≤ |I|。
    """
    validate_locality(n, r)
    p = part_count(n, r)
    chosen = set()
    for i in range(1, p):
        base = (i - 1) * (r + 1)
        chosen.update((base + 1, base + 2, i * (r + 1)))

    base = (p - 1) * (r + 1)
    if base + 1 == n:
        chosen.add(n)
    elif base + 2 == n:
        chosen.update((base + 1, base + 2))
    else:
        chosen.update((base + 1, base + 2, n))
    return tuple(sorted(chosen))


def complete(n: int) -> Graph:
    """完全图K_n，对应单奇偶校验码"""
    if n < 2:
        raise ParameterError("完全图要求 n ≥ 2", f"n={n}")
    return from_edge_list(n, combinations(range(1, n + 1), 2))


def random_bounded_degree(n: int, r: int, seed: int, fill: float = 1.0) -> Graph:
    """
    最大度不超过r且无孤立顶点的随机图

    先随机两两配对保证每个顶点至少有一个邻居（n为奇数时最后一个顶点并入第一对），
    再随机尝试约 fill·n·r/2 条边，只在两端度数都小于r时加入。

    Args:
        n: 顶点数
        r: 最大度上限
        seed: 随机种子（numpy PCG64）
        fill: 追加边尝试次数的比例系数

    Returns:
        Graph实例
    """
    validate_locality(n, r)
    rng = np.random.default_rng(seed)
    order = [int(v) + 1 for v in rng.permutation(n)]

    adjacency: List[set] = [set() for _ in range(n)]

    def link(u: int, v: int) -> None:
        adjacency[u - 1].add(v)
        adjacency[v - 1].add(u)

    for k in range(0, n - 1, 2):
        link(order[k], order[k + 1])
    if n % 2 == 1:
        link(order[-1], order[0])

    attempts = int(math.ceil(fill * n * r / 2))
    candidates = rng.integers(1, n + 1, size=(attempts, 2))
    for u, v in candidates:
        u, v = int(u), int(v)
        if u == v or v in adjacency[u - 1]:
            continue
        if len(adjacency[u - 1]) < r and len(adjacency[v - 1]) < r:
            link(u, v)

    return Graph.trusted(n, [tuple(sorted(nbrs)) for nbrs in adjacency])
