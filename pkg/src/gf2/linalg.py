"""
GF(2) 稠密线性代数模块
矩阵按行打包为小端64位字，消元使用numpy向量化的XOR行运算

约定：
1. 所有对外下标（行、列、比特位）均从1开始，与图的顶点编号一致
2. BitMatrix / BitVector 构造后不可变，所有消元都在内部副本上进行
3. 填充位恒为0
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InputFormatError,
    MatrixPreconditionError,
    ParameterError,
)

WORD_BITS = 64
WORD = np.dtype("<u8")
_ONE = np.uint64(1)


def _n_words(n_bits: int) -> int:
    return (n_bits + WORD_BITS - 1) // WORD_BITS


def _pack(dense: np.ndarray) -> np.ndarray:
    """把二维0/1数组打包成 (行数, 字数) 的字数组"""
    bits = (np.asarray(dense, dtype=np.int64) & 1).astype(np.uint8)
    n_rows, n_cols = bits.shape
    padded = np.zeros((n_rows, _n_words(n_cols) * WORD_BITS), dtype=np.uint8)
    padded[:, :n_cols] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(WORD)


def _unpack(words: np.ndarray, n_cols: int) -> np.ndarray:
    """把字数组还原为 (行数, n_cols) 的uint8数组"""
    raw = np.ascontiguousarray(words, dtype=WORD).view(np.uint8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :n_cols]


def _popcount_rows(words: np.ndarray) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype=WORD).view(np.uint8)
    return np.unpackbits(raw, axis=1).sum(axis=1, dtype=np.int64)


def _readonly(words: np.ndarray) -> np.ndarray:
    words = np.array(words, dtype=WORD, copy=True)
    words.setflags(write=False)
    return words


def _check_index(index: int, upper: int, what: str) -> int:
    if not 1 <= index <= upper:
        raise IndexOutOfRangeError(f"{what}下标越界 (index out of range)", f"{index} ∉ [1, {upper}]")
    return index - 1


class BitVector:
    """GF(2)上的定长比特向量"""

    __slots__ = ("_length", "_words")

    def __init__(self, length: int, words: np.ndarray):
        if length < 0:
            raise ParameterError("向量长度不能为负", str(length))
        if words.shape != (_n_words(length),):
            raise ParameterError("打包字数与向量长度不一致", f"{words.shape} vs {length}")
        self._length = length
        self._words = _readonly(words)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        values = np.fromiter((int(b) for b in bits), dtype=np.int64)
        if values.size and not np.isin(values, (0, 1)).all():
            raise InputFormatError("比特值只能是0或1", str(values.tolist()))
        return cls(values.size, _pack(values[None, :])[0])

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise InputFormatError("码字文本只能包含'0'/'1'字符", text)
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, np.zeros(_n_words(length), dtype=WORD))

    @classmethod
    def unit(cls, length: int, index: int) -> "BitVector":
        """第index位（从1开始）为1的单位向量"""
        position = _check_index(index, length, "单位向量")
        bits = np.zeros(length, dtype=np.uint8)
        bits[position] = 1
        return cls.from_bits(bits)

    @property
    def length(self) -> int:
        return self._length

    @property
    def words(self) -> np.ndarray:
        return self._words

    def bit(self, index: int) -> int:
        position = _check_index(index, self._length, "比特")
        word, offset = divmod(position, WORD_BITS)
        return int((int(self._words[word]) >> offset) & 1)

    def to_array(self) -> np.ndarray:
        if self._length == 0:
            return np.zeros(0, dtype=np.uint8)
        return _unpack(self._words[None, :], self._length)[0]

    def to_list(self) -> List[int]:
        return [int(b) for b in self.to_array()]

    def to_string(self) -> str:
        return "".join(str(b) for b in self.to_list())

    def weight(self) -> int:
        if self._length == 0:
            return 0
        return int(_popcount_rows(self._words[None, :])[0])

    def is_zero(self) -> bool:
        return not self._words.any()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if not isinstance(other, BitVector):
            return NotImplemented
        if other.length != self._length:
            raise DimensionMismatchError("向量长度不一致 (dimension mismatch)", f"{self._length} vs {other.length}")
        return BitVector(self._length, self._words ^ other.words)

    def __len__(self) -> int:
        return self._length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._length == other.length and np.array_equal(self._words, other.words)

    def __hash__(self) -> int:
        return hash((self._length, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector('{self.to_string()}')"


class BitMatrix:
    """GF(2)上的稠密矩阵，每行按64位字打包"""

    __slots__ = ("_n_rows", "_n_cols", "_words")

    def __init__(self, n_rows: int, n_cols: int, words: np.ndarray):
        if n_rows < 1 or n_cols < 1:
            raise ParameterError("矩阵行数和列数必须至少为1", f"{n_rows}x{n_cols}")
        if words.shape != (n_rows, _n_words(n_cols)):
            raise ParameterError("打包字数组形状不匹配", f"{words.shape}")
        self._n_rows = n_rows
        self._n_cols = n_cols
        self._words = _readonly(words)

    # ---------- 构造 ----------

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> "BitMatrix":
        array = np.asarray(dense)
        if array.ndim != 2:
            raise ParameterError("矩阵必须是二维数组", f"ndim={array.ndim}")
        n_rows, n_cols = array.shape
        return cls(n_rows, n_cols, _pack(array))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls.from_dense(np.array([list(row) for row in rows], dtype=np.int64))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> "BitMatrix":
        """把若干等长向量按行堆叠"""
        if not vectors:
            raise ParameterError("至少需要一个向量")
        length = vectors[0].length
        if any(v.length != length for v in vectors):
            raise DimensionMismatchError("堆叠的向量长度不一致 (dimension mismatch)")
        return cls(len(vectors), length, np.stack([v.words for v in vectors]))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows, n_cols, np.zeros((n_rows, _n_words(n_cols)), dtype=WORD))

    @classmethod
    def ones(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls.from_dense(np.ones((n_rows, n_cols), dtype=np.uint8))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        """
        解析矩阵文本格式

        格式：首行"n_rows n_cols"，随后n_rows行'0'/'1'字符，无分隔符

        Raises:
            InputFormatError: 格式错误
        """
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise InputFormatError("矩阵文本为空")
        header = lines[0].split()
        if len(header) != 2 or not all(token.isdigit() for token in header):
            raise InputFormatError("矩阵文本首行应为'n_rows n_cols'", lines[0])
        n_rows, n_cols = int(header[0]), int(header[1])
        body = lines[1:]
        if len(body) != n_rows:
            raise InputFormatError("矩阵行数与首行声明不符", f"{len(body)} vs {n_rows}")
        for number, line in enumerate(body, start=2):
            if len(line) != n_cols or any(ch not in "01" for ch in line):
                raise InputFormatError(f"第{number}行不是长度为{n_cols}的0/1串", line)
        return cls.from_rows([[int(ch) for ch in line] for line in body])

    def to_text(self) -> str:
        lines = [f"{self._n_rows} {self._n_cols}"]
        lines.extend("".join(str(b) for b in row) for row in self.to_dense())
        return "\n".join(lines) + "\n"

    # ---------- 访问 ----------

    @property
    def n_rows(self) -> int:
        return self._n_rows

    @property
    def n_cols(self) -> int:
        return self._n_cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._n_rows, self._n_cols

    @property
    def words(self) -> np.ndarray:
        return self._words

    def is_square(self) -> bool:
        return self._n_rows == self._n_cols

    def get(self, i: int, j: int) -> int:
        row = _check_index(i, self._n_rows, "行")
        col = _check_index(j, self._n_cols, "列")
        word, offset = divmod(col, WORD_BITS)
        return int((int(self._words[row, word]) >> offset) & 1)

    def row(self, i: int) -> BitVector:
        return BitVector(self._n_cols, self._words[_check_index(i, self._n_rows, "行")])

    def to_dense(self) -> np.ndarray:
        return _unpack(self._words, self._n_cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other.words)

    def __hash__(self) -> int:
        return hash((self._n_rows, self._n_cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self._n_rows}x{self._n_cols})"


def _eliminate(words: np.ndarray, reduced: bool) -> Tuple[np.ndarray, List[int]]:
    """
    行主序高斯消元（取每行最低位的1作为主元）

    Args:
        words: 打包后的行
        reduced: True时同时消去主元上方的行，得到简化行阶梯形

    Returns:
        (主元行, 主元列)：主元列为0起始下标，顺序与主元行一致
    """
    work = np.array(words, dtype=WORD, copy=True)
    n_rows = work.shape[0]
    pivot_rows: List[int] = []
    pivot_cols: List[int] = []

    for i in range(n_rows):
        row = work[i]
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            continue

        word_index = int(nonzero[0])
        word = int(row[word_index])
        offset = (word & -word).bit_length() - 1
        shift = np.uint64(offset)

        start = 0 if reduced else i + 1
        block = work[start:]
        if block.shape[0]:
            hits = ((block[:, word_index] >> shift) & _ONE).astype(bool)
            if reduced:
                hits[i] = False
            block[hits] ^= row

        pivot_rows.append(i)
        pivot_cols.append(word_index * WORD_BITS + offset)

    return work[pivot_rows], pivot_cols


def rank(m: BitMatrix) -> int:
    """GF(2)行秩"""
    _, pivot_cols = _eliminate(m.words, reduced=False)
    return len(pivot_cols)


def nullspace_basis(m: BitMatrix) -> List[BitVector]:
    """
    计算零空间的规范基

    由简化行阶梯形得到：每个自由列f对应一个基向量，其第f位为1，
    主元列位置取对应主元行在第f列上的值。基向量按自由列升序排列。

    Returns:
        n_cols - rank(m) 个线性无关的向量
    """
    pivot_words, pivot_cols = _eliminate(m.words, reduced=True)
    free_cols = sorted(set(range(m.n_cols)) - set(pivot_cols))
    if not free_cols:
        return []

    basis = np.zeros((len(free_cols), m.n_cols), dtype=np.uint8)
    basis[np.arange(len(free_cols)), free_cols] = 1
    if pivot_cols:
        pivot_dense = _unpack(pivot_words, m.n_cols)
        basis[:, pivot_cols] = pivot_dense[:, free_cols].T

    packed = _pack(basis)
    return [BitVector(m.n_cols, packed[k]) for k in range(len(free_cols))]


def mat_vec_mul(m: BitMatrix, v: BitVector) -> BitVector:
    """
    矩阵向量乘 m·v（GF(2)）

    Raises:
        DimensionMismatchError: v的长度不等于列数
    """
    if v.length != m.n_cols:
        raise DimensionMismatchError("矩阵列数与向量长度不一致 (dimension mismatch)", f"{m.n_cols} vs {v.length}")
    products = m.words & v.words[None, :]
    return BitVector.from_bits(_popcount_rows(products) & 1)


def row_weight(m: BitMatrix, i: int) -> int:
    """第i行（从1开始）中1的个数"""
    row = _check_index(i, m.n_rows, "行")
    return int(_popcount_rows(m.words[row : row + 1])[0])


def row_weights(m: BitMatrix) -> List[int]:
    return [int(w) for w in _popcount_rows(m.words)]


def _require_square(m: BitMatrix) -> None:
    if not m.is_square():
        raise MatrixPreconditionError("矩阵必须是方阵 (non-square)", f"{m.n_rows}x{m.n_cols}")


def is_symmetric(m: BitMatrix) -> bool:
    _require_square(m)
    dense = m.to_dense()
    return bool(np.array_equal(dense, dense.T))


def has_unit_diagonal(m: BitMatrix) -> bool:
    _require_square(m)
    index = np.arange(m.n_rows)
    words = m.words[index, index // WORD_BITS]
    shifts = (index % WORD_BITS).astype(np.uint64)
    return bool(((words >> shifts) & _ONE).all())


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix.from_dense(m.to_dense().T)


def select_rows(m: BitMatrix, rows: Sequence[int]) -> BitMatrix:
    """按给定行号（从1开始）抽取子矩阵"""
    if not rows:
        raise ParameterError("至少需要选择一行")
    positions = [_check_index(i, m.n_rows, "行") for i in rows]
    return BitMatrix(len(positions), m.n_cols, m.words[positions])


def distinct_row_count(m: BitMatrix) -> int:
    """不同行的个数，是秩的一个上界"""
    return int(np.unique(m.words, axis=0).shape[0])
