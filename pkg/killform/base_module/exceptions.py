import typing as t
from enum import Enum


class ErrorCode(Enum):
    """Коды ошибок с сообщением и кодом завершения CLI."""

    ParseError = ('parse_error', 'Не удалось разобрать входные данные', 2)
    ValidationError = ('validation_error', 'Ошибка валидации параметров', 2)
    UsageError = ('usage_error', 'Неверное использование команды', 2)
    UnsupportedFamily = (
        'unsupported_family', 'Операция не поддерживается для семейства', 2
    )
    CapExceeded = ('cap_exceeded', 'Превышен лимит вычислений', 3)
    MembershipError = ('membership_error', 'Элемент не принадлежит множеству', 1)
    ConstructionError = ('construction_error', 'Нарушен инвариант построения', 1)
    DimensionMismatch = ('dimension_mismatch', 'Несовместимые размеры', 1)
    NotInvertible = ('not_invertible', 'Матрица необратима', 1)
    RankTooLarge = ('rank_too_large', 'Ранг больше допустимого', 1)
    IOError = ('io_error', 'Ошибка ввода-вывода', 1)

    def __init__(self, tag: str, message: str, exit_code: int):
        self.tag = tag
        self.message = message
        self.exit_code = exit_code


class EXC(Exception):
    """Единственный тип исключения killform."""

    def __init__(
            self,
            code: ErrorCode,
            details: t.Mapping[str, t.Any] | None = None,
    ):
        self.code = code
        self.details = dict(details or {})
        super().__init__(f'{code.tag}: {code.message}')

    @property
    def exit_code(self) -> int:
        return self.code.exit_code

    def dump(self) -> dict[str, t.Any]:
        return {
            'error': self.code.tag,
            'message': self.code.message,
            'details': self.details,
        }
