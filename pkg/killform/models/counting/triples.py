import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ...config import KillformConfig
from ..classes import ClassTable
from ..groups import SylowStructure
from ..killing import ClassSupportFn
from ..parallel import map_ordered, split_rows

_logger = ClassesLoggerAdapter.create('triples')


class TripleCount(Model):
    """Число решений xy = z при x в C1, y в C2, z в C3."""

    c1: int
    c2: int
    c3: int
    count: int


def class_product_histogram(
        T: ClassTable, c1: int, c2: int, config: KillformConfig | None = None
) -> np.ndarray:
    """Для всех c3 сразу: сколько пар (x, y) из C1 x C2 дают xy в c3."""
    config = config or KillformConfig()
    x, y = T[c1].members, T[c2].members
    pairs = x.size * y.size
    if pairs > config.caps.max_triple_pairs:
        raise EXC(
            ErrorCode.CapExceeded,
            details={'pairs': pairs,
                     'max_triple_pairs': config.caps.max_triple_pairs}
        )
    G = T.group
    per_chunk = max(1, config.parallel.chunk_products // max(1, y.size))

    def count(rows: slice) -> np.ndarray:
        products = G.mul(x[rows][:, None], y[None, :])
        return np.bincount(T.class_of[products].reshape(-1), minlength=len(T))

    parts = map_ordered(count, split_rows(x.size, per_chunk), config.parallel.threads)
    hist = np.sum(parts, axis=0).astype(np.int64)
    for c in T.classes:
        if hist[c.id] % c.size:
            raise EXC(
                ErrorCode.ConstructionError,
                details={'reason': 'count not divisible by |C3|', 'c3': c.id}
            )
    _logger.debug('Гистограмма произведений', extra={'c1': c1, 'c2': c2, 'pairs': pairs})
    return hist


def triple_count(
        T: ClassTable, c1: int, c2: int, c3: int,
        config: KillformConfig | None = None,
) -> TripleCount:
    T[c3]
    hist = class_product_histogram(T, c1, c2, config)
    return TripleCount(c1=c1, c2=c2, c3=c3, count=int(hist[c3]))


def nonzero_pair_count(fn: ClassSupportFn, config: KillformConfig | None = None) -> int:
    """Число упорядоченных пар из C x C с ненулевым значением формы."""
    if not fn.set.single_class:
        raise EXC(
            ErrorCode.ValidationError,
            details={'reason': 'expected a single class', 'classes': fn.set.class_ids}
        )
    c = fn.set.class_ids[0]
    hist = class_product_histogram(fn.table, c, c, config)
    return int(hist[fn.f > 0].sum())


def same_sylow_pair_count(T: ClassTable, c: int, sylow: SylowStructure) -> int:
    if not sylow.ti:
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'reason': 'Sylow subgroups are not TI'}
        )
    members = T[c].members
    inside = int(np.isin(sylow.subgroups[0], members).sum())
    return inside * inside * sylow.count


def suzuki_closed_forms(q: int) -> dict[str, int]:
    """Замкнутые формулы подсчётов для классов порядка 4 в Sz(q)."""
    base = q * q * (q * q + 1) * (q - 1)
    return {
        'phi_yyx': base * (2 * q + 1) // 4,
        'phi_yyy': base * (q * q - q - 2) // 8,
        'nonzero_pairs': base * (q * q + q - 1) // 4,
        'same_sylow_pairs': base * (q - 1) // 4,
        'cross_sylow_pairs': q ** 4 * (q * q + 1) * (q - 1) // 4,
    }
