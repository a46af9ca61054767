#!/usr/bin/env python3
"""
最终报告冒烟测试
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from final_report import generate_final_report


def test_final_report_passes_all_checks(capsys):
    results = generate_final_report(n_max=20, samples=20, seed=1, save=False)
    assert set(results) == {"clique_partition", "connected_chain", "certificates", "oracle"}
    for result in results.values():
        assert result["passed"] == result["checked"]
    assert "🎉" in capsys.readouterr().out
