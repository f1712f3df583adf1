import typing as t
from enum import Enum

from pydantic import Field, ValidationError, field_validator

from ...base_module import EXC, ErrorCode, Model
from .table import ClassTable, is_real


def _by_order(T: ClassTable, value: int | None) -> list[int]:
    return [c.id for c in T.classes if c.elt_order == value]


def _by_index(T: ClassTable, value: int | None) -> list[int]:
    T[value]
    return [value]


def _real(T: ClassTable, value: int | None) -> list[int]:
    return [
        c.id for c in T.classes
        if c.id != 0 and not c.is_central and is_real(T, c)
    ]


def _all_noncentral(T: ClassTable, value: int | None) -> list[int]:
    return [c.id for c in T.classes if not c.is_central]


class SelectorKind(Enum):
    """Виды селекторов классов с поддержкой строкового парсинга"""

    ORD = ('ord', _by_order, True, ['ord', 'order'])
    IDX = ('idx', _by_index, True, ['idx', 'id', 'index'])
    REAL = ('real', _real, False, ['real'])
    ALL_NONCENTRAL = (
        'all-noncentral', _all_noncentral, False,
        ['all-noncentral', 'noncentral', 'all']
    )

    def __init__(
            self,
            symbol: str,
            resolver: t.Callable[[ClassTable, int | None], list[int]],
            takes_value: bool,
            aliases: list[str],
    ):
        self.symbol = symbol
        self.resolver = resolver
        self.takes_value = takes_value
        self.aliases = aliases

    def __str__(self):
        return self.symbol

    @classmethod
    def from_string(cls, kind_str: str) -> 'SelectorKind':
        """Преобразует строку в вид селектора"""
        for kind in cls:
            if kind_str in kind.aliases:
                return kind
        raise ValueError(
            f"Неподдерживаемый селектор: '{kind_str}'. "
            f"Доступные: {cls.get_all_aliases()}"
        )

    @classmethod
    def get_all_aliases(cls) -> list[str]:
        aliases = []
        for kind in cls:
            aliases.extend(kind.aliases)
        return aliases


class SelectorTerm(Model):
    """Один терм селектора: вид и необязательное значение"""

    kind: SelectorKind
    value: int | None = Field(default=None, validate_default=True)

    @field_validator('kind', mode='before')
    @classmethod
    def validate_kind(cls, v):
        if isinstance(v, str):
            return SelectorKind.from_string(v.strip())
        return v

    @field_validator('value')
    @classmethod
    def validate_value(cls, v, info):
        kind = info.data.get('kind')
        if kind is None:
            return v
        if kind.takes_value and v is None:
            raise ValueError(f"Селектор '{kind}' требует значение")
        if not kind.takes_value and v is not None:
            raise ValueError(f"Селектор '{kind}' не принимает значение")
        if v is not None and v < 0:
            raise ValueError('Значение селектора не может быть отрицательным')
        return v

    def __str__(self):
        return self.kind.symbol if self.value is None \
            else f'{self.kind.symbol}={self.value}'


class ClassSelector(Model):
    """Селектор классов: объединение термов через запятую"""

    terms: list[SelectorTerm] = Field(..., min_length=1)

    @classmethod
    def parse(cls, text: str) -> 'ClassSelector':
        try:
            terms = []
            for chunk in text.split(','):
                chunk = chunk.strip()
                if not chunk:
                    raise ValueError('Пустой терм селектора')
                name, sep, raw = chunk.partition('=')
                value = None
                if sep:
                    if not raw.strip().isdigit():
                        raise ValueError(f"Значение должно быть целым: '{raw}'")
                    value = int(raw)
                terms.append({'kind': name, 'value': value})
            return cls(terms=terms)
        except ValidationError as e:
            raise EXC(
                ErrorCode.ParseError,
                details={'selector': text,
                         'errors': [err['msg'] for err in e.errors()]}
            )
        except ValueError as e:
            raise EXC(
                ErrorCode.ParseError,
                details={'selector': text, 'reason': str(e)}
            )

    def resolve(self, T: ClassTable) -> list[int]:
        ids: set[int] = set()
        for term in self.terms:
            ids.update(term.kind.resolver(T, term.value))
        if not ids:
            raise EXC(
                ErrorCode.ValidationError,
                details={'selector': str(self), 'reason': 'no classes selected'}
            )
        return sorted(ids)

    def __str__(self):
        return ','.join(str(term) for term in self.terms)
