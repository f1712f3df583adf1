import abc

import numpy as np

from ...base_module import EXC, ErrorCode
from ..ffield import FieldCtx


class Realization(abc.ABC):
    """Способ хранения элементов: строка целых «цифр» фиксированной длины.

    Строки перемножаются пачками (N, width); canonical приводит строку к
    представителю, по которому элементы сравниваются и кодируются.
    """

    width: int
    radix: int
    dtype: type

    @abc.abstractmethod
    def identity(self) -> np.ndarray: ...

    @abc.abstractmethod
    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray: ...

    def canonical(self, rows: np.ndarray) -> np.ndarray:
        return rows

    def invert(self, rows: np.ndarray) -> np.ndarray | None:
        """Быстрое обращение, если реализация его умеет."""
        return None

    def encode(self, row: np.ndarray) -> bytes:
        return np.asarray(row, dtype='>u2').tobytes()

    def decode(self, blob: bytes) -> np.ndarray:
        return np.frombuffer(blob, dtype='>u2').astype(self.dtype)

    def describe(self, row: np.ndarray) -> str:
        return self.encode(row).hex()

    def keys(self, rows: np.ndarray) -> np.ndarray | None:
        """Целочисленные ключи в лексикографическом порядке (если влезают в int64)."""
        if self.radix ** self.width >= 2 ** 63:
            return None
        keys = np.zeros(rows.shape[0], dtype=np.int64)
        for col in range(self.width):
            keys = keys * self.radix + rows[:, col].astype(np.int64)
        return keys


def lex_argmin(stack: np.ndarray) -> np.ndarray:
    """Для стопки (S, N, w) индекс лексикографически минимальной строки по оси S."""
    best = np.zeros(stack.shape[1], dtype=np.intp)
    cur = stack[0]
    rows = np.arange(stack.shape[1])
    for s in range(1, stack.shape[0]):
        cand = stack[s]
        diff = cand != cur
        first = diff.argmax(axis=1)
        less = diff.any(axis=1) & (
            cand[rows, first] < cur[rows, first]
        )
        best[less] = s
        cur = np.where(less[:, None], cand, cur)
    return best


class PermRealization(Realization):
    """Перестановки степени n <= 255, образы 0..n-1."""

    dtype = np.uint8

    def __init__(self, degree: int):
        if not 1 <= degree <= 255:
            raise EXC(ErrorCode.ValidationError, details={'degree': degree})
        self.degree = degree
        self.width = degree
        self.radix = degree

    def identity(self) -> np.ndarray:
        return np.arange(self.degree, dtype=self.dtype)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # (g h)(i) = g(h(i))
        a, b = np.broadcast_arrays(a, b)
        return np.take_along_axis(a, b.astype(np.intp), axis=1)

    def invert(self, rows: np.ndarray) -> np.ndarray:
        return np.argsort(rows, axis=1).astype(self.dtype)

    def encode(self, row: np.ndarray) -> bytes:
        return np.asarray(row, dtype=np.uint8).tobytes()

    def decode(self, blob: bytes) -> np.ndarray:
        return np.frombuffer(blob, dtype=np.uint8).copy()

    def describe(self, row: np.ndarray) -> str:
        return cycle_notation(row)


def cycle_notation(row: np.ndarray) -> str:
    seen = set()
    cycles = []
    for start in range(len(row)):
        if start in seen or int(row[start]) == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = int(row[i])
        cycles.append('(' + ' '.join(map(str, cyc)) + ')')
    return ''.join(cycles) or '()'


class MatrixRealization(Realization):
    """Матрицы d x d над полем (коды в uint16), по модулю скаляров scalars."""

    dtype = np.uint16

    def __init__(
            self, field: FieldCtx, dim: int, scalars: tuple[int, ...] = (1,)
    ):
        self.field = field
        self.dim = dim
        self.width = dim * dim
        self.radix = field.q
        self.scalars = tuple(sorted(scalars))
        self._add, self._mul = field.tables()

    @property
    def is_quotient(self) -> bool:
        return len(self.scalars) > 1

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=self.dtype).reshape(-1)

    def matrix(self, rows: list[list[int]]) -> np.ndarray:
        return np.asarray(rows, dtype=self.dtype).reshape(-1)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(a, b)
        d = self.dim
        A = a.reshape(-1, d, d)
        B = b.reshape(-1, d, d)
        # prod[n, i, k, j] = A[n, i, k] * B[n, k, j]
        prod = self._mul[A[:, :, :, None], B[:, None, :, :]]
        acc = prod[:, :, 0, :]
        for k in range(1, d):
            acc = self._add[acc, prod[:, :, k, :]]
        return self.canonical(acc.reshape(-1, self.width))

    def scale(self, rows: np.ndarray, scalar: int) -> np.ndarray:
        return self._mul[scalar, rows]

    def canonical(self, rows: np.ndarray) -> np.ndarray:
        if not self.is_quotient:
            return rows
        stack = np.stack([self.scale(rows, s) for s in self.scalars])
        pick = lex_argmin(stack)
        return stack[pick, np.arange(rows.shape[0])]

    def describe(self, row: np.ndarray) -> str:
        d = self.dim
        return '[' + ';'.join(
            ','.join(str(int(x)) for x in row[i * d:(i + 1) * d])
            for i in range(d)
        ) + ']'
