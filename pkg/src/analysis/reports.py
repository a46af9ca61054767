"""
分析与证书报告模块
把图、码、容量界和秩证书汇总为可JSON导出的报告
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.codes.bounds import (
    CapacityBounds,
    RankCertificate,
    capacity_bounds,
    rank_certificate,
    verify_certificate,
)
from src.codes.storage_code import StorageCode, build_code
from src.gf2.linalg import distinct_row_count, row_weights
from src.graphs.model import Graph, connected_components, is_connected, max_degree
from src.validation.rational import Rational


class AnalysisReport(BaseModel):
    """analyze命令的输出"""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    n: int = Field(..., ge=1, description="顶点数")
    edges: int = Field(..., ge=0, description="边数")
    max_degree: int = Field(..., ge=1, description="最大度，即局部性r")
    connected: bool = Field(..., description="图是否连通")
    component_sizes: List[int] = Field(..., min_length=1, description="各连通分量的大小")
    rank: int = Field(..., ge=1, description="rank(Ā)")
    dimension: int = Field(..., ge=0, description="码维数")
    rate: Rational = Field(..., description="精确码率")
    bounds: Optional[CapacityBounds] = Field(default=None, description="(n, max_degree)的容量上下界")

    @model_validator(mode="after")
    def validate_rate(self) -> "AnalysisReport":
        if self.rank + self.dimension != self.n:
            raise ValueError(f"rank({self.rank}) + dimension({self.dimension}) ≠ n({self.n})")
        if self.rate != Fraction(self.dimension, self.n):
            raise ValueError(f"码率{self.rate}与维数不一致")
        if self.bounds is not None and self.rate > self.bounds.upper:
            raise ValueError(f"码率{self.rate}超过容量上界{self.bounds.upper}")
        return self


class CertifyReport(BaseModel):
    """certify命令的输出"""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    n: int = Field(..., ge=1, description="顶点数")
    max_degree: int = Field(..., ge=1, description="最大度")
    max_row_weight: int = Field(..., ge=2, description="Ā的最大行重，等于最大度+1")
    certificate: RankCertificate
    verified: bool = Field(..., description="证书是否通过校验")
    rate_upper_bound: Rational = Field(..., description="1 - size/n")
    distinct_rows: int = Field(..., ge=1, description="Ā中不同行的个数（秩上界）")
    rate_lower_bound: Rational = Field(..., description="1 - distinct_rows/n")

    @model_validator(mode="after")
    def validate_guarantee(self) -> "CertifyReport":
        # 贪心证书大小至少为 ⌊n / w_max⌋
        if self.certificate.size < self.n // self.max_row_weight:
            raise ValueError(f"证书大小{self.certificate.size}低于 ⌊{self.n}/{self.max_row_weight}⌋")
        return self

    def verdict_line(self) -> str:
        upper = self.rate_upper_bound
        return f"rate ≤ 1 - {self.certificate.size}/{self.n} = {upper.numerator}/{upper.denominator}"


def analyze_graph(g: Graph) -> Tuple[StorageCode, AnalysisReport]:
    """
    分析图对应的存储码

    Args:
        g: 无孤立顶点的图

    Returns:
        (StorageCode, AnalysisReport)；最大度 ≥ 2 时附带容量上下界

    Raises:
        IsolatedVertexError: 存在孤立顶点
    """
    code = build_code(g)
    r = max_degree(g)
    bounds = capacity_bounds(g.n, r) if 2 <= r <= g.n - 1 else None
    report = AnalysisReport(
        n=g.n,
        edges=g.edge_count,
        max_degree=r,
        connected=is_connected(g),
        component_sizes=[len(c) for c in connected_components(g)],
        rank=code.rank,
        dimension=code.dimension,
        rate=code.rate,
        bounds=bounds,
    )
    return code, report


def certify_graph(g: Graph) -> CertifyReport:
    """
    为Ā(g)构造并校验贪心秩证书

    Raises:
        IsolatedVertexError: 存在孤立顶点
    """
    code = build_code(g)
    cert = rank_certificate(code.parity)
    distinct = distinct_row_count(code.parity)
    return CertifyReport(
        n=g.n,
        max_degree=max_degree(g),
        max_row_weight=max(row_weights(code.parity)),
        certificate=cert,
        verified=verify_certificate(code.parity, cert),
        rate_upper_bound=1 - Fraction(cert.size, g.n),
        distinct_rows=distinct,
        rate_lower_bound=1 - Fraction(distinct, g.n),
    )
