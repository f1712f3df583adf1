import threading
import typing as t

from ...config import KillformConfig
from ..classes import ClassTable, Su3Signature, classify_classes, conjugacy_classes
from ..groups import Group, SylowStructure, make_group, sylow_structure


class GroupBundle:
    """Группа с лениво вычисляемыми таблицей классов и силовскими подгруппами."""

    def __init__(self, group: Group):
        self.group = group
        self._table: ClassTable | None = None
        self._sylow: dict[int, SylowStructure] = {}
        self._signatures: dict[int, Su3Signature] | None = None
        self._lock = threading.RLock()

    @property
    def table(self) -> ClassTable:
        with self._lock:
            if self._table is None:
                self._table = conjugacy_classes(self.group)
            return self._table

    def sylow(self, p: int) -> SylowStructure:
        with self._lock:
            if p not in self._sylow:
                self._sylow[p] = sylow_structure(self.group, p)
            return self._sylow[p]

    @property
    def su3_signatures(self) -> dict[int, Su3Signature]:
        with self._lock:
            if self._signatures is None:
                self._signatures = classify_classes(self.table)
            return self._signatures


class GroupProvider(t.Protocol):
    """Источник групп для процедур проверки."""

    config: KillformConfig

    def bundle(self, spec: str) -> GroupBundle: ...


class LocalGroupProvider:
    """Потокобезопасный кэш групп по строке спецификации."""

    def __init__(self, config: KillformConfig | None = None):
        self.config = config or KillformConfig()
        self._bundles: dict[str, GroupBundle] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def bundle(self, spec: str) -> GroupBundle:
        with self._guard:
            lock = self._locks.setdefault(spec, threading.Lock())
        with lock:
            if spec not in self._bundles:
                self._bundles[spec] = GroupBundle(
                    make_group(spec, self.config.caps.max_order)
                )
            return self._bundles[spec]

    def forget(self, spec: str | None = None) -> None:
        with self._guard:
            if spec is None:
                self._bundles.clear()
            else:
                self._bundles.pop(spec, None)

    def __len__(self) -> int:
        return len(self._bundles)
