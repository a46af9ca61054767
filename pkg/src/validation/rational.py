"""
精确有理数字段
在Pydantic模型中以Fraction保存，序列化为"num/den"字符串
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainValidator, PlainSerializer


def parse_rational(value: Any) -> Fraction:
    """接受Fraction、int或"num/den"文本；拒绝浮点数以免丢失精度"""
    if isinstance(value, bool):
        raise ValueError("布尔值不是有理数")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"无法解析有理数: {value}") from exc
    raise ValueError(f"有理数字段只接受Fraction/int/'num/den'，收到 {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
