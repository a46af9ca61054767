"""
文件I/O处理模块
负责把图、报告、证书和扫描结果原子地写入本地文件系统
"""

import hashlib
import json
import os
import tempfile
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel

from src.config.settings import settings
from src.errors import InputFormatError
from src.fileio.formats import parse_edge_list
from src.graphs.model import Graph

PathLike = Union[str, Path]


class ArtifactHandler:
    """产物文件处理器"""

    def __init__(self, base_output_dir: Optional[str] = None, write_metadata: Optional[bool] = None):
        self.base_output_dir = Path(base_output_dir or settings.output_dir)
        self.write_metadata = settings.write_metadata if write_metadata is None else write_metadata

    def resolve(self, path: PathLike) -> Path:
        """相对路径以输出目录为基准；绝对路径原样返回"""
        target = Path(path)
        if target.is_absolute() or target.parent != Path("."):
            return target
        return self.base_output_dir / target

    def save_text(self, text: str, path: PathLike, artifact_type: str = "text") -> str:
        """
        原子写入文本（临时文件 + 重命名）

        Args:
            text: 文件内容
            path: 目标路径
            artifact_type: 产物类型（graph/report/certificate/sweep/codewords）

        Returns:
            保存的文件路径
        """
        filepath = self.resolve(path)
        filepath.parent.mkdir(parents=True, exist_ok=True)

        fd, tmp_name = tempfile.mkstemp(prefix=f".{filepath.name}.", suffix=".tmp", dir=filepath.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
            os.replace(tmp_name, filepath)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

        if self.write_metadata:
            self._save_metadata(filepath, self._calculate_file_hash(filepath), artifact_type)
        return str(filepath)

    def save_model(self, model: BaseModel, path: PathLike, artifact_type: str = "report") -> str:
        """以固定字段顺序保存Pydantic模型为JSON"""
        return self.save_text(model.model_dump_json(indent=2) + "\n", path, artifact_type)

    def load_graph(self, path: PathLike) -> Graph:
        """
        读取边列表文件

        Raises:
            InputFormatError: 文件格式错误
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise InputFormatError("图文件不是UTF-8文本", str(path)) from exc
        return parse_edge_list(text)

    def _calculate_file_hash(self, filepath: Path) -> str:
        """计算文件SHA256哈希"""
        sha256_hash = hashlib.sha256()

        with open(filepath, "rb") as f:
            for byte_block in iter(lambda: f.read(4096), b""):
                sha256_hash.update(byte_block)

        return sha256_hash.hexdigest()

    def _save_metadata(self, filepath: Path, file_hash: str, artifact_type: str) -> None:
        """保存元数据文件"""
        metadata = {
            "artifact": filepath.name,
            "generated_at": datetime.now().isoformat(),
            "file_hash": file_hash,
            "artifact_type": artifact_type,
            "schema_version": "1.0.0",
        }

        metadata_path = filepath.with_name(filepath.name + ".meta.json")

        with open(metadata_path, "w", encoding="utf-8") as f:
            json.dump(metadata, f, ensure_ascii=False, indent=2)


# 单例实例
artifact_handler = ArtifactHandler()
