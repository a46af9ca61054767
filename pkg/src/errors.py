"""
异常定义模块
所有业务异常均继承自ValueError，并携带命令行退出码
"""

from typing import Optional


class StorageCodeError(ValueError):
    """存储码工具集异常基类"""

    exit_code: int = 1

    def __init__(self, message: str, detail: Optional[str] = None):
        self.message = message
        self.detail = detail
        super().__init__(message if detail is None else f"{message}: {detail}")


class ParameterError(StorageCodeError):
    """参数错误（如 n、r 超出范围）"""

    exit_code = 2


class DimensionMismatchError(ParameterError):
    """向量/矩阵维度不匹配"""


class IndexOutOfRangeError(ParameterError):
    """下标越界（所有下标从1开始）"""


class LimitExceededError(ParameterError):
    """码字枚举规模超过调用方给定的上限"""


class MatrixPreconditionError(ParameterError):
    """矩阵不满足前置条件（非方阵、非对称、对角线不全为1）"""


class InputFormatError(StorageCodeError):
    """输入文本格式错误"""

    exit_code = 3


class InvalidGraphError(InputFormatError):
    """图不是简单图（自环、顶点标号越界）"""


class ModelViolationError(StorageCodeError):
    """违反存储码模型（孤立顶点、非码字）"""

    exit_code = 4


class IsolatedVertexError(ModelViolationError):
    """图中存在孤立顶点，对应服务器无法查询任何邻居"""


class NonCodewordError(ModelViolationError):
    """存储内容不是合法码字"""
