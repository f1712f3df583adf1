import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ...config import KillformConfig
from ..classes import ClassTable, GStableSet
from ..groups import Group, GroupElement
from ..parallel import map_ordered, split_rows

_logger = ClassesLoggerAdapter.create('support')


class ClassSupportFn(Model):
    """f(D) = |C_G(d) ∩ C| для представителя d каждого класса D."""

    table: ClassTable
    set: GStableSet
    f: np.ndarray

    @property
    def group(self) -> Group:
        return self.table.group

    def values_for_products(self, products: np.ndarray) -> np.ndarray:
        return self.f[self.table.class_of[products]]

    def dump_values(self) -> dict[str, int]:
        return {str(cid): int(v) for cid, v in enumerate(self.f)}


def support_function(
        T: ClassTable, C: GStableSet, config: KillformConfig | None = None
) -> ClassSupportFn:
    config = config or KillformConfig()
    G = T.group
    for cid in C.class_ids:
        if T[cid].is_central:
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_id': cid, 'reason': 'central class'}
            )

    members = C.members
    per_chunk = max(1, config.parallel.chunk_products // max(1, members.size))
    reps = np.array([c.rep for c in T.classes])

    def count(rows: slice) -> np.ndarray:
        block = reps[rows]
        mask = G.commute_mask(block[:, None], members[None, :])
        return mask.sum(axis=1)

    parts = map_ordered(
        count, split_rows(len(reps), per_chunk), config.parallel.threads
    )
    f = np.concatenate(parts).astype(np.int64)

    if f[0] != C.size:
        raise EXC(
            ErrorCode.ConstructionError,
            details={'reason': 'f(1) != |C|', 'f1': int(f[0]), 'size': C.size}
        )
    for c in T.classes:
        if f[c.id] != f[T.inverse_class(c.id)]:
            raise EXC(
                ErrorCode.ConstructionError,
                details={'reason': 'f not inverse-invariant', 'class_id': c.id}
            )
    _logger.info(
        'Опорная функция вычислена',
        extra={'set_size': C.size, 'support': int((f > 0).sum())}
    )
    return ClassSupportFn(table=T, set=C, f=f)


def _as_index(x: GroupElement | int) -> int:
    return x.index if isinstance(x, GroupElement) else int(x)


def killing_value(
        fn: ClassSupportFn, a: GroupElement | int, b: GroupElement | int
) -> int:
    a, b = _as_index(a), _as_index(b)
    if not fn.set.contains([a, b]).all():
        raise EXC(
            ErrorCode.MembershipError,
            details={'a': a, 'b': b, 'reason': 'not in the stable set'}
        )
    return int(fn.values_for_products(fn.group.mul(a, b)))


def killing_rows(fn: ClassSupportFn, rows: np.ndarray, columns: np.ndarray) -> np.ndarray:
    """Значения K(rows[i], columns[j]) одним умножением на пару."""
    products = fn.group.mul(rows[:, None], columns[None, :])
    return fn.values_for_products(products)
