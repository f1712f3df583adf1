import enum
import typing as t

import numpy as np
from pydantic import Field

from ...base_module import ClassesLoggerAdapter, Model

_logger = ClassesLoggerAdapter.create('verdict')


def _plain(value):
    """numpy-скаляры и массивы в обычные типы Python."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class VerdictStatus(enum.Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    SKIP = 'SKIP'


class Evidence(Model):
    """Строка доказательства: утверждение, ожидание, наблюдение."""

    claim: str
    expected: t.Any
    observed: t.Any
    ok: bool = Field(default=True, exclude=True)


class Verdict(Model):
    """Результат проверки одного утверждения."""

    theorem: str
    params: dict[str, t.Any] = Field(default_factory=dict)
    passed: bool = Field(alias='pass')
    status: VerdictStatus
    evidence: list[Evidence] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)


class VerdictBuilder:
    """Накопитель строк доказательства для вердикта."""

    def __init__(self, theorem: str, **params):
        self.theorem = theorem
        self.params = params
        self._rows: list[Evidence] = []
        self._notes: list[str] = []
        self._skipped = False

    def check(self, claim: str, expected, observed) -> bool:
        expected, observed = _plain(expected), _plain(observed)
        ok = bool(expected == observed)
        self._rows.append(
            Evidence(claim=claim, expected=expected, observed=observed, ok=ok)
        )
        return ok

    def note(self, text: str) -> None:
        self._notes.append(text)

    def skip(self, reason: str) -> 'VerdictBuilder':
        self._skipped = True
        self._notes.append(reason)
        return self

    def build(self) -> Verdict:
        if self._skipped:
            status = VerdictStatus.SKIP
            passed = True
        else:
            passed = bool(self._rows) and all(row.ok for row in self._rows)
            status = VerdictStatus.PASS if passed else VerdictStatus.FAIL
        _logger.info(
            'Вердикт готов',
            extra={'theorem': self.theorem, 'status': status.value,
                   'rows': len(self._rows)}
        )
        return Verdict(
            theorem=self.theorem,
            params=self.params,
            passed=passed,
            status=status,
            evidence=self._rows,
            notes=self._notes,
        )
