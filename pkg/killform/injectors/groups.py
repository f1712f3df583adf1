import asyncio

from ..base_module import ClassesLoggerAdapter, EXC
from ..config import KillformConfig
from ..models import GroupBundle, LocalGroupProvider


class GroupRegistryInj:
    """Кэш построенных групп, общий для сервисов и проверок."""

    def __init__(self, config: KillformConfig | None = None) -> None:
        self.config = config or KillformConfig()
        self._provider: LocalGroupProvider | None = None
        self._locks: dict[str, asyncio.Lock] = {}
        self._logger = ClassesLoggerAdapter.create(self)
        self._is_setup = False

    async def setup(self) -> None:
        """Инициализация кэша."""
        if self._is_setup:
            return
        self._provider = LocalGroupProvider(self.config)
        self._is_setup = True
        self._logger.info(
            'Реестр групп создан.',
            extra={'max_order': self.config.caps.max_order,
                   'threads': self.config.parallel.threads}
        )

    def bundle(self, spec: str) -> GroupBundle:
        """Синхронный доступ для процедур, работающих в потоках."""
        if self._provider is None:
            self._provider = LocalGroupProvider(self.config)
            self._is_setup = True
        return self._provider.bundle(spec)

    async def acquire(self, spec: str) -> GroupBundle:
        """Группа с таблицей классов; построение уходит в поток."""
        if not self._is_setup:
            await self.setup()
        lock = self._locks.setdefault(spec, asyncio.Lock())
        async with lock:
            try:
                bundle = await asyncio.to_thread(self.bundle, spec)
                await asyncio.to_thread(lambda: bundle.table)
            except EXC as e:
                self._logger.warning(
                    'Ошибка построения группы.',
                    extra={'spec': spec, 'code': e.code.tag}
                )
                raise
        return bundle

    async def dispose(self) -> None:
        """Освобождение кэша."""
        if self._provider is not None:
            self._logger.info(
                'Реестр групп закрыт.', extra={'groups': len(self._provider)}
            )
            self._provider.forget()
            self._provider = None
        self._locks.clear()
        self._is_setup = False
