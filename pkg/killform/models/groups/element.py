import enum

import numpy as np

from ...base_module import EXC, ErrorCode
from .group import Group


class ElemOp(enum.Enum):
    """Операции над элементами группы."""

    MUL = ('mul', ['mul', '*'])
    INV = ('inv', ['inv', 'inverse'])
    CONJ = ('conj', ['conj', 'conjugate'])
    ORDER = ('order', ['order', 'ord'])

    def __init__(self, symbol: str, aliases: list[str]):
        self.symbol = symbol
        self.aliases = aliases

    @classmethod
    def from_string(cls, op_str: str) -> 'ElemOp':
        for op in cls:
            if op_str in op.aliases:
                return op
        raise EXC(ErrorCode.ParseError, details={'op': op_str})


class GroupElement:
    """Элемент перечисленной группы (группа + плотный индекс)."""

    __slots__ = ('group', 'index')

    def __init__(self, group: Group, index: int):
        self.group = group
        self.index = index

    @classmethod
    def from_rows(cls, group: Group, row) -> 'GroupElement':
        row = np.asarray(row, dtype=group.realization.dtype).reshape(1, -1)
        row = group.realization.canonical(row)
        return cls(group, int(group.index_of(row)[0]))

    @property
    def data(self) -> np.ndarray:
        return self.group.data[self.index]

    def _same(self, other: 'GroupElement') -> None:
        if not isinstance(other, GroupElement) or other.group is not self.group:
            raise EXC(
                ErrorCode.MembershipError,
                details={'reason': 'group mismatch'}
            )

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        self._same(other)
        return GroupElement(
            self.group, int(self.group.mul(self.index, other.index))
        )

    def inverse(self) -> 'GroupElement':
        return GroupElement(self.group, int(self.group.inv(self.index)))

    def conj(self, h: 'GroupElement') -> 'GroupElement':
        """h g h^-1."""
        self._same(h)
        return GroupElement(
            self.group, int(self.group.conj(self.index, h.index))
        )

    def order(self) -> int:
        return self.group.element_order(self.index)

    def encode(self) -> bytes:
        return self.group.encode(self.index)

    @property
    def is_identity(self) -> bool:
        return self.index == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and other.group is self.group
            and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.index))

    def __repr__(self) -> str:
        return f'<{self.group.kind.spec} #{self.index} {self.group.describe(self.index)}>'


def elem_op(
        g: GroupElement, h: GroupElement | None, op: ElemOp | str
) -> GroupElement | int:
    op = ElemOp.from_string(op) if isinstance(op, str) else op
    match op:
        case ElemOp.MUL:
            return g * h
        case ElemOp.INV:
            return g.inverse()
        case ElemOp.CONJ:
            return g.conj(h)
        case ElemOp.ORDER:
            return g.order()
