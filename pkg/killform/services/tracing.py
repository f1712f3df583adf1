import typing as t
from contextlib import contextmanager
from uuid import uuid4

from ..base_module import ClassesLoggerAdapter


class TracingService:
    TRACE_KEY = 'trace_id'

    @property
    def trace_id(self) -> str:
        return ClassesLoggerAdapter.TRACE_ID.get()

    @classmethod
    @contextmanager
    def trace(cls, trace_id: str | None = None):
        token = ClassesLoggerAdapter.TRACE_ID.set(trace_id or uuid4().hex)
        try:
            yield
        finally:
            ClassesLoggerAdapter.TRACE_ID.reset(token)

    @classmethod
    def emit(cls, settable: t.MutableMapping):
        settable[cls.TRACE_KEY] = ClassesLoggerAdapter.TRACE_ID.get()
