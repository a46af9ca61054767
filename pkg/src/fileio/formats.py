"""
文本格式模块
边列表文件与码字文本的解析/生成
"""

from typing import List, Tuple

from src.errors import DimensionMismatchError, InputFormatError
from src.gf2.linalg import BitVector
from src.graphs.model import Graph, from_edge_list, to_dot, to_edge_list


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """去掉空行和#注释，保留原始行号"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _parse_int_pair(number: int, line: str) -> Tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2:
        raise InputFormatError(f"第{number}行应包含两个整数", line)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise InputFormatError(f"第{number}行包含非整数", line) from exc


def parse_edge_list(text: str) -> Graph:
    """
    解析边列表文本

    格式：首行"n m"，随后m行"u v"

    Raises:
        InputFormatError: 格式错误、边数不符
        InvalidGraphError: 自环或顶点标号越界
    """
    lines = _content_lines(text)
    if not lines:
        raise InputFormatError("边列表为空")
    n, m = _parse_int_pair(*lines[0])
    if n < 1 or m < 0:
        raise InputFormatError("首行的n必须为正、m不能为负", lines[0][1])
    body = lines[1:]
    if len(body) != m:
        raise InputFormatError("边数与首行声明不符", f"声明{m}条，实际{len(body)}条")
    return from_edge_list(n, [_parse_int_pair(number, line) for number, line in body])


def format_edge_list(g: Graph) -> str:
    edges = to_edge_list(g)
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    """按格式名（edgelist/dot）导出图"""
    if fmt == "edgelist":
        return format_edge_list(g)
    if fmt == "dot":
        return to_dot(g)
    raise InputFormatError("未知的图格式", fmt)


def parse_codeword(text: str, n: int) -> BitVector:
    """
    解析长度为n的'0'/'1'文本（码字或消息）

    Raises:
        InputFormatError: 含非0/1字符
        DimensionMismatchError: 长度不等于n
    """
    vector = BitVector.from_string(text)
    if vector.length != n:
        raise DimensionMismatchError(f"比特串长度应为{n} (dimension mismatch)", text.strip())
    return vector


def format_codewords(codewords: List[BitVector]) -> str:
    return "".join(f"{c.to_string()}\n" for c in codewords)
