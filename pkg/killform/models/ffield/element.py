import enum
import typing as t

from ...base_module import EXC, ErrorCode
from .ctx import FieldCtx


class FieldOp(enum.Enum):
    """Операции поля с поддержкой строкового парсинга."""

    ADD = ('add', ['add', '+'])
    SUB = ('sub', ['sub', '-'])
    MUL = ('mul', ['mul', '*'])
    DIV = ('div', ['div', '/'])
    POW = ('pow', ['pow', '**', '^'])

    def __init__(self, symbol: str, aliases: list[str]):
        self.symbol = symbol
        self.aliases = aliases

    @classmethod
    def from_string(cls, op_str: str) -> 'FieldOp':
        for op in cls:
            if op_str in op.aliases:
                return op
        raise EXC(ErrorCode.ParseError, details={'op': op_str})


class FieldElement:
    """Элемент GF(p^k) в каноническом виде (код и вектор коэффициентов)."""

    __slots__ = ('ctx', 'code')

    def __init__(self, ctx: FieldCtx, value: int | t.Sequence[int]):
        self.ctx = ctx
        if isinstance(value, int):
            if not 0 <= value < ctx.q:
                raise EXC(
                    ErrorCode.ValidationError,
                    details={'code': value, 'field': repr(ctx)}
                )
            self.code = value
        else:
            if len(value) != ctx.k:
                raise EXC(
                    ErrorCode.DimensionMismatch,
                    details={'coeffs': list(value), 'k': ctx.k}
                )
            self.code = ctx.from_coeffs(list(value))

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.coeffs(self.code)

    def _same(self, other: 'FieldElement') -> None:
        if not isinstance(other, FieldElement) or other.ctx != self.ctx:
            raise EXC(
                ErrorCode.DimensionMismatch,
                details={'reason': 'context mismatch'}
            )

    def _wrap(self, code: int) -> 'FieldElement':
        return FieldElement(self.ctx, code)

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        self._same(other)
        return self._wrap(self.ctx.add(self.code, other.code))

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        self._same(other)
        return self._wrap(self.ctx.sub(self.code, other.code))

    def __neg__(self) -> 'FieldElement':
        return self._wrap(self.ctx.neg(self.code))

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        self._same(other)
        return self._wrap(self.ctx.mul(self.code, other.code))

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        self._same(other)
        if other.code == 0:
            raise EXC(
                ErrorCode.NotInvertible, details={'reason': 'division by zero'}
            )
        return self._wrap(self.ctx.div(self.code, other.code))

    def __pow__(self, e: int) -> 'FieldElement':
        if e < 0:
            raise EXC(ErrorCode.ValidationError, details={'exponent': e})
        return self._wrap(self.ctx.pow(self.code, e))

    def inverse(self) -> 'FieldElement':
        return self._wrap(self.ctx.inv(self.code))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.ctx == self.ctx
            and other.code == self.code
        )

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.k, self.code))

    def __lt__(self, other: 'FieldElement') -> bool:
        self._same(other)
        return self.code < other.code

    def __repr__(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
            coef = str(c) if (c != 1 or i == 0) else ''
            terms.append(coef + mono)
        return ' + '.join(terms) or '0'


def field_arith(
        a: FieldElement, b: FieldElement | int, op: FieldOp | str
) -> FieldElement:
    op = FieldOp.from_string(op) if isinstance(op, str) else op
    if op is FieldOp.POW:
        if not isinstance(b, int):
            raise EXC(ErrorCode.ValidationError, details={'exponent': repr(b)})
        return a ** b
    match op:
        case FieldOp.ADD:
            return a + b
        case FieldOp.SUB:
            return a - b
        case FieldOp.MUL:
            return a * b
        case FieldOp.DIV:
            return a / b


def frobenius(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.frobenius(a.code, e))


def trace_to_subfield(a: FieldElement) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.trace_to_subfield(a.code))
