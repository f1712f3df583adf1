import typing as t

import numpy as np
from pydantic import Field

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ...config import KillformConfig
from ..classes import GStableSet
from ..groups import Group
from ..parallel import map_ordered, split_rows
from .support import ClassSupportFn, killing_rows
from .unionfind import UnionFind

_logger = ClassesLoggerAdapter.create('graph')


class ComponentReport(Model):
    """Связность графа на C: число и размеры компонент."""

    component_count: int = Field(alias='components')
    component_sizes: list[int] = Field(alias='sizes')
    equals_commuting_graph: bool | None = None
    vertex_to_component: np.ndarray = Field(exclude=True)
    rows_scanned: int = Field(default=0, exclude=True)

    @property
    def connected(self) -> bool:
        return self.component_count == 1


# (edges, commute) для порции строк
_RowFn = t.Callable[[np.ndarray], tuple[np.ndarray, np.ndarray | None]]


class _GraphScanner:
    """Обход в ширину по строкам смежности с объединением компонент.

    Строки считаются порциями (параллельно), слияние идёт строго по порядку.
    Когда все вершины открыты, компоненты известны; оставшиеся строки
    нужны только для сравнения с графом коммутирования.
    """

    def __init__(
            self,
            members: np.ndarray,
            row_fn: _RowFn,
            compare: bool,
            config: KillformConfig,
    ):
        self._members = members
        self._row_fn = row_fn
        self._compare = compare
        self._config = config
        self._n = members.size
        self._per_chunk = max(1, config.parallel.chunk_products // max(1, self._n))

    def _compute(self, positions: list[int]) -> list[tuple[np.ndarray, np.ndarray | None]]:
        threads = self._config.parallel.threads
        pieces = split_rows(len(positions), self._per_chunk)
        arr = np.asarray(positions, dtype=np.int64)

        def work(piece: slice):
            return self._row_fn(self._members[arr[piece]])

        results = []
        for edges, commute in map_ordered(work, pieces, threads):
            for i in range(edges.shape[0]):
                results.append(
                    (edges[i], None if commute is None else commute[i])
                )
        return results

    def run(self) -> ComponentReport:
        n = self._n
        uf = UnionFind(n)
        discovered = np.zeros(n, dtype=bool)
        processed = np.zeros(n, dtype=bool)
        queue: list[int] = []
        differs = False
        batch = self._per_chunk * self._config.parallel.threads
        scanned = 0

        while not discovered.all():
            if not queue:
                root = int(np.argmin(discovered))
                discovered[root] = True
                queue.append(root)
            take, queue = queue[:batch], queue[batch:]
            for pos, (edges, commute) in zip(take, self._compute(take)):
                processed[pos] = True
                scanned += 1
                neighbours = np.flatnonzero(edges)
                if neighbours.size:
                    uf.union_many(pos, neighbours)
                fresh = neighbours[~discovered[neighbours]]
                discovered[fresh] = True
                queue.extend(fresh.tolist())
                if commute is not None and (commute != edges).any():
                    differs = True

        if self._compare and not differs:
            rest = np.flatnonzero(~processed).tolist()
            while rest and not differs:
                take, rest = rest[:batch], rest[batch:]
                for edges, commute in self._compute(take):
                    scanned += 1
                    if (commute != edges).any():
                        differs = True
                        break

        labels = uf.labels()
        sizes = np.bincount(labels).tolist()
        return ComponentReport(
            components=len(sizes),
            sizes=sizes,
            equals_commuting_graph=(not differs) if self._compare else None,
            vertex_to_component=labels,
            rows_scanned=scanned,
        )


def _check_graph_size(C: GStableSet, config: KillformConfig) -> None:
    if C.size > config.caps.max_class_graph:
        raise EXC(
            ErrorCode.CapExceeded,
            details={'set_size': C.size,
                     'max_class_graph': config.caps.max_class_graph}
        )


def _check_components(report: ComponentReport, C: GStableSet) -> None:
    if C.single_class and len(set(report.component_sizes)) > 1:
        raise EXC(
            ErrorCode.ConstructionError,
            details={'reason': 'unequal component sizes',
                     'sizes': report.component_sizes}
        )


def killing_graph_components(
        fn: ClassSupportFn,
        config: KillformConfig | None = None,
        compare_commuting: bool = True,
) -> ComponentReport:
    config = config or KillformConfig()
    C = fn.set
    _check_graph_size(C, config)
    G = fn.group

    def rows(a: np.ndarray):
        edges = killing_rows(fn, a, C.members) > 0
        commute = (
            G.commute_mask(a[:, None], C.members[None, :])
            if compare_commuting else None
        )
        return edges, commute

    report = _GraphScanner(C.members, rows, compare_commuting, config).run()
    _check_components(report, C)
    _logger.info(
        'Граф Киллинга разобран',
        extra={'set_size': C.size, 'components': report.component_count,
               'rows': report.rows_scanned,
               'equals_commuting': report.equals_commuting_graph}
    )
    return report


def commuting_graph_components(
        G: Group, C: GStableSet, config: KillformConfig | None = None
) -> ComponentReport:
    config = config or KillformConfig()
    _check_graph_size(C, config)

    def rows(a: np.ndarray):
        return G.commute_mask(a[:, None], C.members[None, :]), None

    report = _GraphScanner(C.members, rows, False, config).run()
    _logger.info(
        'Граф коммутирования разобран',
        extra={'set_size': C.size, 'components': report.component_count}
    )
    return report
