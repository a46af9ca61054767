"""
容量界与秩证书模块
1. 容量上下界：1 - ⌈n/(r+1)⌉/n ≤ C_{n,r} ≤ 1 - ⌊n/(r+1)⌋/n
2. 贪心"好列"证书：三角结构的线性无关列集合，给出秩下界（即码率上界）
"""

from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.codes.storage_code import StorageCode
from src.errors import MatrixPreconditionError
from src.gf2.linalg import (
    BitMatrix,
    distinct_row_count,
    has_unit_diagonal,
    is_symmetric,
    rank,
    select_rows,
    transpose,
)
from src.graphs.constructions import validate_locality
from src.utils.console import console
from src.validation.rational import Rational


class CapacityBounds(BaseModel):
    """容量C_{n,r}的精确上下界"""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    n: int = Field(..., ge=2, description="码长")
    r: int = Field(..., ge=2, description="局部性")
    lower: Rational = Field(..., description="1 - ⌈n/(r+1)⌉/n")
    upper: Rational = Field(..., description="1 - ⌊n/(r+1)⌋/n")

    @model_validator(mode="after")
    def validate_order(self) -> "CapacityBounds":
        if self.lower > self.upper:
            raise ValueError(f"下界{self.lower}大于上界{self.upper}")
        if self.upper - self.lower > Fraction(1, self.n):
            raise ValueError(f"上下界之差超过1/n: {self.upper - self.lower}")
        return self

    @property
    def tight(self) -> bool:
        """(r+1)整除n时上下界相等"""
        return self.lower == self.upper

    @property
    def gap(self) -> Fraction:
        return self.upper - self.lower


class RankCertificate(BaseModel):
    """秩下界证书：按选取顺序排列的(主元行, 列)对"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1, description="矩阵阶数")
    picks: Tuple[Tuple[int, int], ...] = Field(default=(), description="[(pivot_row, column), ...]")
    size: int = Field(..., ge=0, description="证书大小，即秩下界")

    @model_validator(mode="after")
    def validate_size(self) -> "RankCertificate":
        if self.size != len(self.picks):
            raise ValueError(f"size({self.size})与picks数量({len(self.picks)})不一致")
        return self


def capacity_bounds(n: int, r: int) -> CapacityBounds:
    """
    容量上下界

    Args:
        n: 码长，n ≥ 2
        r: 局部性，2 ≤ r ≤ n-1

    Returns:
        CapacityBounds（精确有理数）
    """
    validate_locality(n, r)
    ceiling = -(-n // (r + 1))
    floor = n // (r + 1)
    return CapacityBounds(n=n, r=r, lower=1 - Fraction(ceiling, n), upper=1 - Fraction(floor, n))


def _require_certificate_input(a: BitMatrix) -> None:
    if not a.is_square():
        raise MatrixPreconditionError("证书要求方阵 (non-square)", f"{a.n_rows}x{a.n_cols}")
    if not is_symmetric(a):
        raise MatrixPreconditionError("证书要求对称矩阵 (non-symmetric)")
    if not has_unit_diagonal(a):
        raise MatrixPreconditionError("证书要求对角线全为1 (zero-diagonal)")


def rank_certificate(a: BitMatrix) -> RankCertificate:
    """
    贪心构造"好列"集合

    依次扫描行i：若已选列在第i行全为0，则选取第i行中编号最小的1所在的列j。
    对角线为1保证这样的j总存在。所选列在各自主元行上构成三角结构，因此线性无关。

    Raises:
        MatrixPreconditionError: 非方阵、非对称或对角线含0
    """
    _require_certificate_input(a)
    dense = a.to_dense().astype(bool)
    covered = np.zeros(a.n_rows, dtype=bool)
    picks: List[Tuple[int, int]] = []

    for i in range(a.n_rows):
        if covered[i]:
            continue
        j = int(np.flatnonzero(dense[i])[0])
        picks.append((i + 1, j + 1))
        covered |= dense[:, j]

    return RankCertificate(n=a.n_rows, picks=tuple(picks), size=len(picks))


def certificate_coverage(a: BitMatrix, cert: RankCertificate) -> Dict[int, List[int]]:
    """
    覆盖映射：每个选中列新覆盖的行（用于诊断）

    Returns:
        {列号: [新覆盖的行号, ...]}，按选取顺序
    """
    dense = a.to_dense().astype(bool)
    covered = np.zeros(a.n_rows, dtype=bool)
    coverage: Dict[int, List[int]] = {}
    for _, j in cert.picks:
        column = dense[:, j - 1]
        fresh = column & ~covered
        coverage[j] = [int(i) + 1 for i in np.flatnonzero(fresh)]
        covered |= column
    return coverage


def verify_certificate(a: BitMatrix, cert: RankCertificate) -> bool:
    """
    校验证书：逐步检查三角见证结构，并确认所选列子矩阵的秩等于证书大小

    任何违反都返回False，不抛异常。
    """
    if not a.is_square() or cert.n != a.n_rows:
        return False
    n = a.n_rows
    for i, j in cert.picks:
        if not (1 <= i <= n and 1 <= j <= n):
            return False
    columns = [j for _, j in cert.picks]
    if len(set(columns)) != len(columns):
        return False

    dense = a.to_dense().astype(bool)
    for k, (i, j) in enumerate(cert.picks):
        if not dense[i - 1, j - 1]:
            console.debug(f"证书第{k + 1}步: 列{j}在主元行{i}上不为1")
            return False
        for _, earlier in cert.picks[:k]:
            if dense[i - 1, earlier - 1]:
                console.debug(f"证书第{k + 1}步: 先前的列{earlier}在行{i}上为1")
                return False

    if cert.size == 0:
        return True

    for column, rows in certificate_coverage(a, cert).items():
        console.debug(f"列{column}覆盖行 {rows}")

    # 列子矩阵的秩 = 转置后对应行的秩
    submatrix = select_rows(transpose(a), columns)
    return rank(submatrix) == cert.size


def rate_upper_bound_from_certificate(code: StorageCode) -> Fraction:
    """由证书得到的码率上界 1 - size/n，不小于实际码率"""
    cert = rank_certificate(code.parity)
    return 1 - Fraction(cert.size, code.n)


def rank_sandwich(a: BitMatrix) -> Tuple[int, int, int]:
    """
    秩的三明治：证书大小 ≤ rank ≤ 不同行数

    Returns:
        (证书大小, 秩, 不同行的个数)
    """
    cert = rank_certificate(a)
    return cert.size, rank(a), distinct_row_count(a)
