import io

import numpy as np

from ...config import KillformConfig
from ..parallel import map_ordered, split_rows
from .graph import ComponentReport
from .support import ClassSupportFn, killing_rows


def graph_to_dot(
        fn: ClassSupportFn,
        report: ComponentReport,
        config: KillformConfig | None = None,
        title: str = 'killing',
) -> str:
    """Граф Киллинга в формате DOT.

    Вершины подписаны кодировкой элемента (hex) и номером компоненты.
    Рёбра выводятся, только если |C| не больше предела для матриц.
    """
    config = config or KillformConfig()
    G = fn.group
    members = fn.set.members
    order = np.argsort(G.encoding_rank[members], kind='stable')
    out = io.StringIO()
    out.write(f'graph "{title}" {{\n')
    for pos in order.tolist():
        x = int(members[pos])
        label = G.encode(x).hex()
        component = int(report.vertex_to_component[pos])
        out.write(f'  v{x} [label="{label} c{component}"];\n')

    if members.size <= config.caps.max_class_matrix:
        per_chunk = max(1, config.parallel.chunk_products // max(1, members.size))
        ranked = members[order]
        parts = map_ordered(
            lambda rows: killing_rows(fn, ranked[rows], ranked) > 0,
            split_rows(members.size, per_chunk),
            config.parallel.threads,
        )
        edges = np.concatenate(parts)
        for i, j in zip(*np.nonzero(np.triu(edges, 1))):
            out.write(f'  v{int(ranked[i])} -- v{int(ranked[j])};\n')
    out.write('}\n')
    return out.getvalue()
