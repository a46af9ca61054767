"""
图模型模块
简单无向图（顶点编号1..n）、增广邻接矩阵以及结构查询
"""

from itertools import chain
from typing import Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from src.errors import IndexOutOfRangeError, InvalidGraphError, ParameterError
from src.gf2.linalg import BitMatrix

Edge = Tuple[int, int]
Adjacency = Tuple[Tuple[int, ...], ...]


class Graph:
    """
    存储拓扑：顶点即服务器，邻居即修复时可查询的服务器

    构造后不可变；邻居集合按升序保存。
    """

    __slots__ = ("_n", "_adjacency")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 1:
            raise ParameterError("顶点数必须至少为1", str(n))
        if len(adjacency) != n:
            raise ParameterError("邻接表长度必须等于顶点数", f"{len(adjacency)} vs {n}")

        neighbor_sets = [frozenset(nbrs) for nbrs in adjacency]
        for v, nbrs in enumerate(neighbor_sets, start=1):
            if v in nbrs:
                raise InvalidGraphError("不允许自环 (self-loop)", f"({v}, {v})")
            for u in nbrs:
                if not 1 <= u <= n:
                    raise InvalidGraphError("顶点标号越界 (out-of-range label)", f"{u} ∉ [1, {n}]")
                if v not in neighbor_sets[u - 1]:
                    raise InvalidGraphError("邻接关系不对称", f"{u} ∈ N({v}) 但 {v} ∉ N({u})")

        self._n = n
        self._adjacency: Adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)

    @classmethod
    def trusted(cls, n: int, adjacency: Sequence[Tuple[int, ...]]) -> "Graph":
        """
        跳过校验直接构建

        调用方保证：len(adjacency) = n，邻居元组升序、对称、无自环且标号在1..n内。
        """
        g = cls.__new__(cls)
        g._n = n
        g._adjacency = tuple(adjacency)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> Adjacency:
        """按顶点顺序排列的升序邻居元组"""
        return self._adjacency

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if not 1 <= v <= self._n:
            raise IndexOutOfRangeError("顶点下标越界 (index out of range)", f"{v} ∉ [1, {self._n}]")
        return self._adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def edges(self) -> List[Edge]:
        """每条无向边只列一次，(u, v)满足u < v，按字典序排列"""
        return [(u, v) for u, nbrs in enumerate(self._adjacency, start=1) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other.n and self._adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count})"


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """
    由边列表构建图，重复边静默去重

    Args:
        n: 顶点数
        edges: (u, v) 边序列

    Returns:
        Graph实例

    Raises:
        InvalidGraphError: 自环或顶点标号越界（报告第一条出错的边）
    """
    if n < 1:
        raise ParameterError("顶点数必须至少为1", str(n))
    pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
    if pairs.size == 0:
        return Graph.trusted(n, [()] * n)

    loops = pairs[:, 0] == pairs[:, 1]
    out_of_range = ((pairs < 1) | (pairs > n)).any(axis=1)
    bad = np.flatnonzero(loops | out_of_range)
    if bad.size:
        first = int(bad[0])
        u, v = (int(x) for x in pairs[first])
        if loops[first]:
            raise InvalidGraphError("不允许自环 (self-loop)", f"({u}, {v})")
        label = u if not 1 <= u <= n else v
        raise InvalidGraphError("顶点标号越界 (out-of-range label)", f"{label} ∉ [1, {n}]")

    # 两个方向各存一份，按(起点, 终点)去重排序后按起点切分
    arcs = np.unique(np.concatenate([pairs, pairs[:, ::-1]]), axis=0)
    counts = np.bincount(arcs[:, 0] - 1, minlength=n)
    targets = np.split(arcs[:, 1], np.cumsum(counts)[:-1])
    return Graph.trusted(n, [tuple(chunk.tolist()) for chunk in targets])


def to_edge_list(g: Graph) -> List[Edge]:
    return g.edges()


def to_dot(g: Graph, name: str = "G") -> str:
    """导出DOT文本，每条无向边一行；孤立顶点单独列出"""
    lines = [f"graph {name} {{"]
    covered = set()
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
        covered.update((u, v))
    for v in range(1, g.n + 1):
        if v not in covered:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, g.n + 1))
    graph.add_edges_from(g.edges())
    return graph


def augmented_adjacency(g: Graph) -> BitMatrix:
    """增广邻接矩阵Ā：对角线为1的邻接矩阵"""
    degrees = g.degrees()
    dense = np.eye(g.n, dtype=np.uint8)
    rows = np.repeat(np.arange(g.n), degrees)
    cols = np.fromiter(chain.from_iterable(g.adjacency), dtype=np.int64, count=int(rows.size)) - 1
    dense[rows, cols] = 1
    return BitMatrix.from_dense(dense)


def max_degree(g: Graph) -> int:
    """局部性r：修复一个顶点最多需要查询的邻居数"""
    return max(g.degrees())


def isolated_vertices(g: Graph) -> List[int]:
    return [v for v, d in enumerate(g.degrees(), start=1) if d == 0]


def has_isolated_vertex(g: Graph) -> bool:
    return 0 in g.degrees()


def is_connected(g: Graph) -> bool:
    return nx.is_connected(to_networkx(g))


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """连通分量，按最小顶点编号排序"""
    components = [tuple(sorted(c)) for c in nx.connected_components(to_networkx(g))]
    return sorted(components)
