#!/usr/bin/env python3
"""
图上二元存储码工具集 - 命令行脚本

调用示例：
python scripts/storage_codes.py construct clique 19 5 --format dot
python scripts/storage_codes.py analyze output/chain_12_3.txt
python scripts/storage_codes.py sweep 4 256 --r-rule sqrt --out sweep.csv
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.errors import StorageCodeError


def run() -> None:
    # 配置在导入时读取，非法环境变量也按退出码处理
    try:
        from src.cli.main import main
    except StorageCodeError as e:
        print(f"❌ 配置错误: {e}", file=sys.stderr)
        sys.exit(e.exit_code)
    main()


if __name__ == "__main__":
    run()
