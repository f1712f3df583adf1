import asyncio

from ..base_module import ClassesLoggerAdapter, EXC, ErrorCode
from ..injectors import GroupRegistryInj
from ..models import (
    ClassRow,
    ClassSelector,
    CountReport,
    GroupBundle,
    GroupInfo,
    KillingMatrix,
    KillingReport,
    build_stable_set,
    blockwise_det,
    class_product_histogram,
    is_real,
    killing_graph_components,
    killing_matrix,
    support_function,
)
from ..models.killing import ClassSupportFn, ComponentReport, graph_to_dot


class KillingService:
    """Async сервис над движками: классы, форма Киллинга, подсчёты"""

    def __init__(self, registry: GroupRegistryInj) -> None:
        self._registry = registry
        self._logger = ClassesLoggerAdapter.create(self)

    @property
    def config(self):
        return self._registry.config

    def _form(self, bundle: GroupBundle, selector: ClassSelector) -> ClassSupportFn:
        ids = selector.resolve(bundle.table)
        S = build_stable_set(bundle.table, ids)
        return support_function(bundle.table, S, self.config)

    async def info(self, spec: str) -> GroupInfo:
        """Порядок группы и таблица классов"""
        bundle = await self._registry.acquire(spec)
        G, T = bundle.group, bundle.table
        return GroupInfo(
            spec=G.kind.spec,
            order=G.order,
            center_order=int(G.center().size),
            classes=[
                ClassRow(
                    id=c.id, order=c.elt_order, size=c.size,
                    centralizer_order=c.centralizer_order,
                    real=is_real(T, c.id), rep=G.describe(c.rep),
                )
                for c in T.classes
            ],
        )

    async def killing(
            self, spec: str, selector: str, with_matrix: bool = False
    ) -> tuple[KillingReport, KillingMatrix | None]:
        """Опорная функция, компоненты и вердикт о вырожденности"""
        sel = ClassSelector.parse(selector)
        bundle = await self._registry.acquire(spec)
        return await asyncio.to_thread(self._killing, bundle, sel, with_matrix)

    def _killing(
            self, bundle: GroupBundle, sel: ClassSelector, with_matrix: bool
    ) -> tuple[KillingReport, KillingMatrix | None]:
        fn = self._form(bundle, sel)
        graph = killing_graph_components(fn, self.config, compare_commuting=True)
        report = KillingReport(
            spec=bundle.group.kind.spec,
            selector=str(sel),
            class_ids=fn.set.class_ids,
            set_size=fn.set.size,
            support=fn.dump_values(),
            graph=graph,
        )
        if fn.set.size > self.config.caps.max_class_matrix:
            if with_matrix:
                raise EXC(
                    ErrorCode.CapExceeded,
                    details={'set_size': fn.set.size,
                             'max_class_matrix': self.config.caps.max_class_matrix}
                )
            report.notes.append(
                f'|C| = {fn.set.size} above the matrix cap; determinant not computed'
            )
            return report, None

        K = killing_matrix(fn, graph, self.config)
        det = blockwise_det(K, fn, self.config)
        report.degenerate = det.degenerate
        report.det = det.det
        report.rank = det.rank
        report.method = det.method.value
        self._logger.info(
            'Форма Киллинга разобрана',
            extra={'spec': report.spec, 'components': graph.component_count,
                   'degenerate': report.degenerate}
        )
        return report, K if with_matrix else None

    async def graph(self, spec: str, selector: str) -> tuple[ComponentReport, str]:
        """Компоненты графа и его DOT-представление"""
        sel = ClassSelector.parse(selector)
        bundle = await self._registry.acquire(spec)

        def work():
            fn = self._form(bundle, sel)
            report = killing_graph_components(fn, self.config, compare_commuting=True)
            dot = graph_to_dot(fn, report, self.config, title=f'{spec} {sel}')
            return report, dot

        return await asyncio.to_thread(work)

    async def count(self, spec: str, triple: str) -> CountReport:
        """Число решений xy = z для тройки классов c1,c2,c3"""
        try:
            c1, c2, c3 = (int(v) for v in triple.split(','))
        except ValueError:
            raise EXC(
                ErrorCode.ParseError,
                details={'triple': triple, 'expected': 'c1,c2,c3'}
            )
        bundle = await self._registry.acquire(spec)
        T = bundle.table
        if not 0 <= c3 < len(T):
            raise EXC(
                ErrorCode.ValidationError,
                details={'c3': c3, 'classes': len(T)}
            )
        hist = await asyncio.to_thread(class_product_histogram, T, c1, c2, self.config)
        return CountReport(
            spec=bundle.group.kind.spec, c1=c1, c2=c2, c3=c3,
            count=int(hist[c3]),
            histogram={str(i): int(v) for i, v in enumerate(hist) if v},
        )
