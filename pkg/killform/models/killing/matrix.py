import io
from pathlib import Path

import numpy as np
from pydantic import Field

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ...config import KillformConfig
from ..parallel import map_ordered, split_rows
from .graph import ComponentReport, killing_graph_components
from .support import ClassSupportFn, killing_rows

_logger = ClassesLoggerAdapter.create('matrix')

CSV_HEADER = '# killing-matrix group={group} class={selector} order=component-grouped'


class KillingMatrix(Model):
    """Матрица K_C в порядке: компонента, затем кодировка."""

    ordering: np.ndarray
    entries: np.ndarray
    blocks: list[tuple[int, int]] = Field(default_factory=list)
    component_of: np.ndarray | None = None

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def component_count(self) -> int:
        return len(self.blocks)

    def block(self, i: int) -> np.ndarray:
        start, size = self.blocks[i]
        return self.entries[start:start + size, start:start + size]

    def is_symmetric(self) -> bool:
        return bool((self.entries == self.entries.T).all())

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)

    def off_block_zero(self) -> bool:
        mask = np.ones(self.entries.shape, dtype=bool)
        for start, size in self.blocks:
            mask[start:start + size, start:start + size] = False
        return not self.entries[mask].any()

    def to_csv(self, group: str, selector: str) -> str:
        out = io.StringIO()
        out.write(CSV_HEADER.format(group=group, selector=selector) + '\n')
        for row in self.entries:
            out.write(','.join(str(int(v)) for v in row) + '\n')
        return out.getvalue()


def killing_matrix(
        fn: ClassSupportFn,
        report: ComponentReport | None = None,
        config: KillformConfig | None = None,
) -> KillingMatrix:
    config = config or KillformConfig()
    C = fn.set
    if C.size > config.caps.max_class_matrix:
        raise EXC(
            ErrorCode.CapExceeded,
            details={'set_size': C.size,
                     'max_class_matrix': config.caps.max_class_matrix}
        )
    if report is None:
        report = killing_graph_components(fn, config, compare_commuting=False)

    rank = fn.group.encoding_rank[C.members]
    order = np.lexsort((rank, report.vertex_to_component))
    ordering = C.members[order]
    component_of = report.vertex_to_component[order]

    blocks, start = [], 0
    for size in np.bincount(component_of).tolist():
        blocks.append((start, size))
        start += size

    per_chunk = max(1, config.parallel.chunk_products // max(1, C.size))
    parts = map_ordered(
        lambda rows: killing_rows(fn, ordering[rows], ordering),
        split_rows(C.size, per_chunk),
        config.parallel.threads,
    )
    entries = np.concatenate(parts).astype(np.int64)
    matrix = KillingMatrix(
        ordering=ordering, entries=entries, blocks=blocks,
        component_of=component_of,
    )
    if not matrix.is_symmetric():
        raise EXC(ErrorCode.ConstructionError, details={'reason': 'K not symmetric'})
    _logger.info(
        'Матрица Киллинга собрана',
        extra={'n': matrix.n, 'blocks': len(blocks)}
    )
    return matrix


def read_killing_csv(path: Path | str) -> np.ndarray:
    """Чтение матрицы из CSV того же формата, что и экспорт."""
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as e:
        raise EXC(ErrorCode.IOError, details={'file': str(path), 'reason': str(e)})
    rows = []
    for no, line in enumerate(lines, 1):
        if not line.strip() or line.startswith('#'):
            continue
        try:
            rows.append([int(v) for v in line.split(',')])
        except ValueError:
            raise EXC(ErrorCode.ParseError, details={'file': str(path), 'line': no})
    if not rows or any(len(r) != len(rows) for r in rows):
        raise EXC(
            ErrorCode.DimensionMismatch,
            details={'file': str(path), 'reason': 'matrix is not square'}
        )
    return np.array(rows, dtype=object)
