import enum
import typing as t

import numpy as np
from pydantic import Field

from ...base_module import EXC, ErrorCode, Model


class ExactMatrix:
    """Квадратная матрица произвольных целых (списки int Python)."""

    __slots__ = ('rows',)

    def __init__(self, rows: t.Iterable[t.Iterable[int]]):
        self.rows = [[int(v) for v in row] for row in rows]
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise EXC(
                ErrorCode.DimensionMismatch,
                details={'reason': 'matrix is not square'}
            )

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> 'ExactMatrix':
        return cls(array.tolist())

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> 'ExactMatrix':
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int, scale: int = 1) -> 'ExactMatrix':
        """Θ: матрица из единиц (квадратная)."""
        return cls([[scale] * n for _ in range(n)])

    @classmethod
    def anti_identity(cls, n: int, scale: int = 1) -> 'ExactMatrix':
        """Ī: единицы на побочной диагонали."""
        return cls([[scale if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_blocks(cls, blocks: list[list[list[list[int]]]]) -> 'ExactMatrix':
        rows = []
        for band in blocks:
            height = len(band[0])
            for i in range(height):
                rows.append([v for block in band for v in block[i]])
        return cls(rows)

    def __add__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if other.n != self.n:
            raise EXC(ErrorCode.DimensionMismatch, details={'n': self.n, 'm': other.n})
        return ExactMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def permuted(self, perm: t.Sequence[int]) -> 'ExactMatrix':
        """P M P^T для перестановки perm."""
        return ExactMatrix([[self.rows[i][j] for j in perm] for i in perm])

    def submatrix(self, start: int, size: int) -> 'ExactMatrix':
        return ExactMatrix(
            [row[start:start + size] for row in self.rows[start:start + size]]
        )

    def is_diagonal(self) -> bool:
        return all(
            v == 0 for i, row in enumerate(self.rows)
            for j, v in enumerate(row) if i != j
        )

    def diagonal(self) -> list[int]:
        return [self.rows[i][i] for i in range(self.n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and other.rows == self.rows

    def __repr__(self) -> str:
        return f'ExactMatrix(n={self.n})'


class DetMethod(enum.Enum):
    BAREISS = 'bareiss'
    MODULAR_CRT = 'modular-crt'
    CERTIFICATE = 'certificate'
    BLOCKWISE = 'blockwise'


class DetResult(Model):
    """Точный определитель или сертификат det != 0 по модулю простого."""

    det: int | None = None
    nonzero: bool
    rank: int | None = None
    method: DetMethod
    certificate_prime: int | None = None
    primes_used: int = Field(default=0)

    @property
    def degenerate(self) -> bool:
        return not self.nonzero
