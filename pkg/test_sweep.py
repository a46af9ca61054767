#!/usr/bin/env python3
"""
参数扫描测试
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.analysis.sweep import SweepRow, locality_for, parse_r_rule, rows_to_csv, run_sweep, sweep_row
from src.errors import ParameterError


def test_r_rules():
    assert parse_r_rule("sqrt")(100) == 10
    assert parse_r_rule("sqrt")(101) == 11
    assert parse_r_rule("log")(100) == 7
    assert parse_r_rule("log")(64) == 6
    assert parse_r_rule("const:4")(1000) == 4
    for bad in ("const:1", "const:x", "cubic", ""):
        with pytest.raises(ParameterError):
            parse_r_rule(bad)


def test_locality_is_clamped():
    assert locality_for(parse_r_rule("const:10"), 5) == 4
    assert locality_for(parse_r_rule("log"), 3) == 2
    assert locality_for(parse_r_rule("sqrt"), 2) is None


def test_constant_locality_sweep():
    rows = run_sweep(3, 100, "const:2", with_chain=False)
    assert [row.n for row in rows] == list(range(3, 101))
    for row in rows:
        p = -(-row.n // 3)
        assert row.r == 2 and row.p == p
        assert row.rank_achieved == p
        assert row.rate_achieved == 1 - Fraction(p, row.n)
        assert row.lower_bound <= row.rate_achieved <= row.upper_bound
        assert row.rate_achieved <= Fraction(2, 3) + Fraction(1, row.n)
        assert row.connected_rank is None


def test_sqrt_sweep_at_100():
    (row,) = run_sweep(100, 100, "sqrt")
    assert row.r == 10
    assert row.rate_achieved == Fraction(9, 10)
    assert row.connected_rank is not None and row.connected_rank <= 3 * row.p
    assert row.connected_rate == 1 - Fraction(row.connected_rank, 100)


def test_small_n_is_skipped():
    assert [row.n for row in run_sweep(2, 5, "sqrt")] == [3, 4, 5]


def test_invalid_ranges():
    with pytest.raises(ParameterError):
        run_sweep(10, 5, "sqrt")
    with pytest.raises(ParameterError):
        run_sweep(1, 5, "sqrt")
    with pytest.raises(ParameterError):
        run_sweep(3, 5, "sqrt", workers=0)


def test_parallel_sweep_matches_serial():
    serial = run_sweep(3, 40, "log", workers=1)
    parallel = run_sweep(3, 40, "log", workers=2)
    assert serial == parallel


def test_csv_layout():
    text = rows_to_csv([sweep_row(12, 3, with_chain=False)])
    header, line = text.splitlines()
    assert header.split(",")[:5] == ["n", "r", "p", "rank_achieved", "rate_achieved"]
    assert line == "12,3,3,3,3/4,0.750000,3/4,0.750000,3/4,0.750000,18,,,"


def test_row_rejects_rate_outside_bounds():
    with pytest.raises(ValidationError):
        SweepRow(
            n=12,
            r=3,
            p=3,
            rank_achieved=2,
            rate_achieved=Fraction(5, 6),
            lower_bound=Fraction(3, 4),
            upper_bound=Fraction(3, 4),
            edges=18,
        )
