"""
参数扫描模块
对一段n逐个计算团划分构造（及连通链式构造）的秩与码率，并与容量上下界比较
"""

import csv
import io
import math
import re
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.codes.bounds import capacity_bounds
from src.errors import ParameterError
from src.gf2.linalg import rank
from src.graphs.constructions import clique_partition, connected_chain, part_count
from src.graphs.model import augmented_adjacency
from src.utils.console import console
from src.validation.rational import Rational, format_rational

_CONST_RULE = re.compile(r"^const:(\d+)$")


class SweepRow(BaseModel):
    """扫描结果的一行"""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    n: int = Field(..., ge=3, description="码长")
    r: int = Field(..., ge=2, description="局部性")
    p: int = Field(..., ge=1, description="⌈n/(r+1)⌉")
    rank_achieved: int = Field(..., ge=1, description="团划分构造的rank(Ā)")
    rate_achieved: Rational = Field(..., description="团划分构造的码率")
    lower_bound: Rational = Field(..., description="容量下界")
    upper_bound: Rational = Field(..., description="容量上界")
    edges: int = Field(..., ge=0, description="团划分图的边数")
    connected_rank: Optional[int] = Field(default=None, description="链式构造的rank(Ā)")
    connected_rate: Optional[Rational] = Field(default=None, description="链式构造的码率")

    @model_validator(mode="after")
    def validate_bounds(self) -> "SweepRow":
        if not self.lower_bound <= self.rate_achieved <= self.upper_bound:
            raise ValueError(
                f"n={self.n}, r={self.r}: 码率{self.rate_achieved}不在[{self.lower_bound}, {self.upper_bound}]内"
            )
        return self


def parse_r_rule(rule: str) -> Callable[[int], int]:
    """
    解析局部性规则

    支持 const:<k>、sqrt（⌈√n⌉）、log（⌈log2 n⌉）

    Raises:
        ParameterError: 无法识别的规则
    """
    text = rule.strip().lower()
    if text == "sqrt":
        return lambda n: math.isqrt(n - 1) + 1
    if text == "log":
        return lambda n: (n - 1).bit_length()
    match = _CONST_RULE.match(text)
    if match:
        k = int(match.group(1))
        if k < 2:
            raise ParameterError("常数局部性必须 ≥ 2", rule)
        return lambda n: k
    raise ParameterError("未知的r规则，可选 const:<k> | sqrt | log", rule)


def locality_for(rule: Callable[[int], int], n: int) -> Optional[int]:
    """r = clamp(rule(n), 2, n-1)；n < 3时没有合法的r，返回None"""
    if n < 3:
        return None
    return min(max(rule(n), 2), n - 1)


def sweep_row(n: int, r: int, with_chain: bool = True) -> SweepRow:
    """计算单个(n, r)的扫描行"""
    bounds = capacity_bounds(n, r)
    g = clique_partition(n, r)
    achieved = rank(augmented_adjacency(g))

    connected_rank: Optional[int] = None
    connected_rate: Optional[Fraction] = None
    if with_chain:
        connected_rank = rank(augmented_adjacency(connected_chain(n, r)))
        connected_rate = 1 - Fraction(connected_rank, n)

    return SweepRow(
        n=n,
        r=r,
        p=part_count(n, r),
        rank_achieved=achieved,
        rate_achieved=1 - Fraction(achieved, n),
        lower_bound=bounds.lower,
        upper_bound=bounds.upper,
        edges=g.edge_count,
        connected_rank=connected_rank,
        connected_rate=connected_rate,
    )


def _sweep_task(args: tuple) -> SweepRow:
    n, r, with_chain = args
    return sweep_row(n, r, with_chain)


def run_sweep(
    n_min: int,
    n_max: int,
    r_rule: str,
    workers: int = 1,
    with_chain: bool = True,
) -> List[SweepRow]:
    """
    在[n_min, n_max]上逐个n扫描

    Args:
        n_min: 起始码长，≥ 2
        n_max: 终止码长（含）
        r_rule: 局部性规则
        workers: 进程数，>1时并行计算各行
        with_chain: 是否同时计算连通链式构造

    Returns:
        按n升序的SweepRow列表

    Raises:
        ParameterError: 区间非法或规则无法识别
    """
    if n_min < 2:
        raise ParameterError("n_min必须 ≥ 2", str(n_min))
    if n_max < n_min:
        raise ParameterError("n_max不能小于n_min", f"{n_max} < {n_min}")
    if workers < 1:
        raise ParameterError("进程数必须为正", str(workers))
    rule = parse_r_rule(r_rule)

    tasks = []
    for n in range(n_min, n_max + 1):
        r = locality_for(rule, n)
        if r is None:
            console.warning(f"n={n}没有满足 2 ≤ r ≤ n-1 的局部性，已跳过")
            continue
        tasks.append((n, r, with_chain))

    console.step(f"扫描 {len(tasks)} 个码长，规则 {r_rule}，进程数 {workers}")
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_task, tasks, chunksize=max(1, len(tasks) // (workers * 4))))
    else:
        rows = [_sweep_task(task) for task in tasks]
    console.success(f"扫描完成: {len(rows)} 行")
    return rows


CSV_COLUMNS = [
    "n",
    "r",
    "p",
    "rank_achieved",
    "rate_achieved",
    "rate_achieved_float",
    "lower_bound",
    "lower_bound_float",
    "upper_bound",
    "upper_bound_float",
    "edges",
    "connected_rank",
    "connected_rate",
    "connected_rate_float",
]


def _rational_cells(value: Optional[Fraction]) -> List[str]:
    if value is None:
        return ["", ""]
    return [format_rational(value), f"{float(value):.6f}"]


def rows_to_csv(rows: List[SweepRow]) -> str:
    """按固定列顺序生成CSV文本：有理数写成"num/den"并附带浮点列"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.n, row.r, row.p, row.rank_achieved]
            + _rational_cells(row.rate_achieved)
            + _rational_cells(row.lower_bound)
            + _rational_cells(row.upper_bound)
            + [row.edges, "" if row.connected_rank is None else row.connected_rank]
            + _rational_cells(row.connected_rate)
        )
    return buffer.getvalue()
