import logging
import sys
import typing as t
from contextvars import ContextVar


class ClassesLoggerAdapter(logging.LoggerAdapter):
    """Логгер с именем класса-владельца и trace_id в каждой записи."""

    DEFAULT_TRACE_ID = '-'
    TRACE_ID: ContextVar[str] = ContextVar('TRACE_ID', default=DEFAULT_TRACE_ID)

    @classmethod
    def create(cls, owner: t.Any, **extra) -> 'ClassesLoggerAdapter':
        name = owner if isinstance(owner, str) else type(owner).__name__
        return cls(logging.getLogger(f'killform.{name}'), extra)

    def process(self, msg, kwargs):
        extra = {**(self.extra or {}), **kwargs.pop('extra', {})}
        kwargs['extra'] = {
            'trace_id': self.TRACE_ID.get(),
            'fields': extra,
        }
        return msg, kwargs


class _ExtraFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        fields = getattr(record, 'fields', None)
        if fields:
            line += ' ' + ' '.join(f'{k}={v}' for k, v in fields.items())
        return line


def configure_logging(level: str | int = logging.WARNING) -> None:
    """Вывод логов в stderr; stdout остаётся за отчётами."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(_ExtraFormatter(
        '%(asctime)s %(levelname)s [%(trace_id)s] %(name)s: %(message)s'
    ))
    root = logging.getLogger('killform')
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False
