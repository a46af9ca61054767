"""
配置管理模块
从环境变量（.env）读取运行参数
"""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.errors import ParameterError

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    """读取布尔型环境变量"""
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    """
    读取整型环境变量

    Raises:
        ParameterError: 值不是整数
    """
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw.strip())
    except ValueError as exc:
        raise ParameterError(f"环境变量{name}必须是整数", raw) from exc


class Settings(BaseModel):
    """运行配置"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    output_dir: str = Field(default="./output", description="相对输出路径的基准目录")
    enum_limit: int = Field(default=65536, ge=1, description="码字枚举默认上限")
    checked_repair: bool = Field(default=False, description="修复前是否校验码字前置条件")
    default_seed: int = Field(default=42, description="模拟与随机图的默认种子")
    sweep_workers: int = Field(default=1, ge=1, description="参数扫描进程数")
    write_metadata: bool = Field(default=True, description="是否写出.meta.json元数据")
    verbose: bool = Field(default=False, description="是否输出调试信息")

    @classmethod
    def from_env(cls, prefix: str = "STORAGE_CODES_") -> "Settings":
        """
        从环境变量构建配置

        Args:
            prefix: 环境变量前缀

        Returns:
            Settings实例

        Raises:
            ParameterError: 环境变量取值非法
        """
        values = dict(
            output_dir=os.getenv(f"{prefix}OUTPUT_DIR", "./output"),
            enum_limit=_env_int(f"{prefix}ENUM_LIMIT", 65536),
            checked_repair=_env_bool(f"{prefix}CHECKED_REPAIR", False),
            default_seed=_env_int(f"{prefix}DEFAULT_SEED", 42),
            sweep_workers=_env_int(f"{prefix}SWEEP_WORKERS", 1),
            write_metadata=_env_bool(f"{prefix}WRITE_METADATA", True),
            verbose=_env_bool(f"{prefix}VERBOSE", False),
        )
        try:
            return cls(**values)
        except ValidationError as exc:
            fields = ", ".join(f"{prefix}{str(err['loc'][0]).upper()}" for err in exc.errors())
            raise ParameterError("环境变量取值非法", fields) from exc


# 单例实例
settings = Settings.from_env()
