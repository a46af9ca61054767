"""
单服务器失效修复模拟器
把码字分配到各服务器，依次注入单点失效，通过查询邻居完成奇偶修复
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.codes.storage_code import StorageCode, encode, repair
from src.errors import DimensionMismatchError, IndexOutOfRangeError, ParameterError
from src.gf2.linalg import BitVector
from src.utils.console import console

RNG_ALGORITHM = "numpy.PCG64"


@dataclass(frozen=True)
class SimConfig:
    """
    模拟配置

    Attributes:
        code: 存储码
        failure_count: 依次注入的失效次数
        seed: 64位随机种子
        message: 待编码消息，缺省时随机生成
        corrupt_vertex: 测试模式，运行前翻转该服务器的比特
    """

    code: StorageCode
    failure_count: int
    seed: int
    message: Optional[BitVector] = None
    corrupt_vertex: Optional[int] = None

    def __post_init__(self) -> None:
        if self.failure_count < 0:
            raise ParameterError("失效次数不能为负", str(self.failure_count))
        if not 0 <= self.seed < 2**64:
            raise ParameterError("种子必须是64位无符号整数", str(self.seed))
        if self.message is not None and self.message.length != self.code.dimension:
            raise DimensionMismatchError(
                "消息长度必须等于码维数 (dimension mismatch)",
                f"{self.message.length} vs {self.code.dimension}",
            )
        if self.corrupt_vertex is not None and not 1 <= self.corrupt_vertex <= self.code.n:
            raise IndexOutOfRangeError("损坏顶点越界 (index out of range)", str(self.corrupt_vertex))


class SimEvent(BaseModel):
    """一次失效与修复"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    failed_vertex: int
    queried_vertices: List[int]
    repaired_bit: int
    correct: bool


class SimReport(BaseModel):
    """模拟报告（字段顺序固定，便于逐字节比较）"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rng_algorithm: str = RNG_ALGORITHM
    seed: int
    n: int
    failure_count: int
    codeword: str
    events: List[SimEvent] = Field(default_factory=list)
    total_queries: int = 0
    max_queries_single_repair: int = 0
    all_correct: bool = True

    @model_validator(mode="after")
    def validate_consistency(self) -> "SimReport":
        if self.all_correct != all(event.correct for event in self.events):
            raise ValueError("all_correct与事件记录不一致")
        if self.total_queries != sum(len(event.queried_vertices) for event in self.events):
            raise ValueError("total_queries与事件记录不一致")
        return self

    def summary_line(self) -> str:
        return (
            f"failures={self.failure_count} queries={self.total_queries} "
            f"max_local={self.max_queries_single_repair} correct={str(self.all_correct).lower()}"
        )


def run_sim(cfg: SimConfig) -> SimReport:
    """
    运行修复模拟

    每次失效均匀随机选择一个服务器，修复只读取其邻居，修复结果写回后再注入下一次失效。
    同一配置与种子产生完全相同的报告。

    Args:
        cfg: 模拟配置

    Returns:
        SimReport
    """
    code = cfg.code
    rng = np.random.default_rng(cfg.seed)

    message = cfg.message
    if message is None:
        message = BitVector.from_bits(rng.integers(0, 2, size=code.dimension))
    servers = encode(code, message).to_list()

    if cfg.corrupt_vertex is not None:
        servers[cfg.corrupt_vertex - 1] ^= 1
        console.warning(f"测试模式：已翻转服务器{cfg.corrupt_vertex}的比特，存储状态不再是码字")
    initial = "".join(str(b) for b in servers)

    events: List[SimEvent] = []
    for _ in range(cfg.failure_count):
        failed = int(rng.integers(1, code.n + 1))
        lost = servers[failed - 1]
        queried: List[int] = []
        stored = BitVector.from_bits(servers)
        bit = repair(code, stored, failed, checked=False, on_query=queried.append)
        servers[failed - 1] = bit
        events.append(SimEvent(failed_vertex=failed, queried_vertices=queried, repaired_bit=bit, correct=bit == lost))

    report = SimReport(
        seed=cfg.seed,
        n=code.n,
        failure_count=cfg.failure_count,
        codeword=initial,
        events=events,
        total_queries=sum(len(e.queried_vertices) for e in events),
        max_queries_single_repair=max((len(e.queried_vertices) for e in events), default=0),
        all_correct=all(e.correct for e in events),
    )
    console.debug(report.summary_line())
    return report
