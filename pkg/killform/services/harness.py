import asyncio
import json
import typing as t

from ..base_module import ClassesLoggerAdapter, EXC, ErrorCode
from ..injectors import GroupRegistryInj
from ..models import DEFAULT_SUITE, Theorem, Verdict, trace_id
from ..models.harness import VerdictBuilder
from .tracing import TracingService


class HarnessService:
    """Async запуск процедур проверки поверх общего реестра групп"""

    def __init__(self, registry: GroupRegistryInj, concurrency: int = 2) -> None:
        self._registry = registry
        self._concurrency = max(1, concurrency)
        self._logger = ClassesLoggerAdapter.create(self)

    @staticmethod
    def _theorem(tag: Theorem | str) -> Theorem:
        if isinstance(tag, Theorem):
            return tag
        try:
            return Theorem.from_string(tag)
        except ValueError as e:
            raise EXC(ErrorCode.UsageError, details={'reason': str(e)})

    async def verify(self, tag: Theorem | str, **params) -> Verdict:
        """Одна проверка в отдельном потоке под своей трассой"""
        theorem = self._theorem(tag)
        params = {k: v for k, v in params.items() if v is not None}
        await self._registry.setup()
        with TracingService.trace(trace_id(theorem, params)):
            self._logger.info('Проверка запущена', extra={'theorem': theorem.tag})
            return await asyncio.to_thread(theorem.run, self._registry, **params)

    async def run_suite(
            self,
            suite: t.Sequence[tuple[Theorem, dict[str, t.Any]]] = DEFAULT_SUITE,
    ) -> list[Verdict]:
        """Независимые проверки параллельно; порядок результатов как в наборе"""
        semaphore = asyncio.Semaphore(self._concurrency)

        async def one(theorem: Theorem, params: dict[str, t.Any]) -> Verdict:
            async with semaphore:
                try:
                    return await self.verify(theorem, **params)
                except EXC as e:
                    self._logger.warning(
                        'Проверка завершилась ошибкой',
                        extra={'theorem': theorem.tag, 'code': e.code.tag},
                        exc_info=True,
                    )
                    b = VerdictBuilder(theorem.tag, **params)
                    b.check('completed without error', None, e.code.tag)
                    b.note(json.dumps(e.dump(), default=str))
                    return b.build()

        return list(await asyncio.gather(*(one(th, p) for th, p in suite)))
