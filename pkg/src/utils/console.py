"""
终端输出模块
带emoji前缀与颜色的状态输出，统一写到stderr，保证stdout可被脚本解析
"""

import sys
from typing import Optional, TextIO

from colorama import Fore, Style, init

from src.config.settings import settings

init()


class Console:
    """彩色状态输出"""

    def __init__(self, verbose: bool = False, stream: Optional[TextIO] = None):
        self.verbose = verbose
        self._stream = stream

    @classmethod
    def from_settings(cls) -> "Console":
        return cls(verbose=settings.verbose)

    @property
    def stream(self) -> TextIO:
        # 延迟取sys.stderr，便于测试替换
        return self._stream if self._stream is not None else sys.stderr

    def _emit(self, icon: str, message: str, color: str = "") -> None:
        line = f"{icon} {message}"
        if color:
            line = f"{color}{line}{Style.RESET_ALL}"
        print(line, file=self.stream)

    def step(self, message: str) -> None:
        self._emit("🔧", message)

    def info(self, message: str) -> None:
        self._emit("📊", message)

    def success(self, message: str) -> None:
        self._emit("✅", message, Fore.GREEN)

    def warning(self, message: str) -> None:
        self._emit("⚠️ ", message, Fore.YELLOW)

    def error(self, message: str) -> None:
        self._emit("❌", message, Fore.RED)

    def debug(self, message: str) -> None:
        """仅在verbose模式下输出"""
        if self.verbose:
            self._emit("🔍", message, Style.DIM)


# 单例实例
console = Console.from_settings()
