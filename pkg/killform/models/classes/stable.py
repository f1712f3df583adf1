import numpy as np
from pydantic import Field

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from .table import ClassTable, is_real

_logger = ClassesLoggerAdapter.create('stable')


class StableRequirements(Model):
    """Требования к G-устойчивому множеству."""

    generates: bool = False
    real: bool = False
    noncentral: bool = True


class GStableSet(Model):
    """Объединение классов сопряжённости."""

    class_ids: list[int]
    members: np.ndarray
    single_class: bool = Field(default=False)

    @property
    def size(self) -> int:
        return int(self.members.size)

    def position_of(self, elements) -> np.ndarray:
        """Позиция элементов в members; -1 для не входящих."""
        elements = np.asarray(elements)
        pos = np.searchsorted(self.members, elements)
        pos = np.minimum(pos, self.members.size - 1)
        return np.where(self.members[pos] == elements, pos, -1)

    def contains(self, elements) -> np.ndarray:
        return self.position_of(elements) >= 0


def build_stable_set(
        T: ClassTable,
        ids,
        require: StableRequirements | None = None,
) -> GStableSet:
    require = require or StableRequirements()
    ids = sorted({int(i) for i in ids})
    if not ids:
        raise EXC(ErrorCode.ValidationError, details={'reason': 'empty class set'})

    for cid in ids:
        cls = T[cid]
        if cid == 0:
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_id': cid, 'reason': 'identity class'}
            )
        if require.noncentral and cls.is_central:
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_id': cid, 'reason': 'central class'}
            )
        if require.real and not is_real(T, cid):
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_id': cid, 'reason': 'class is not real'}
            )

    members = np.sort(np.concatenate([T[c].members for c in ids]))
    if require.generates:
        G = T.group
        reached = G.generated_order(members, stop_at=G.order)
        if reached != G.order:
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_ids': ids, 'reason': 'does not generate',
                         'generated_order': reached}
            )
    _logger.debug(
        'G-устойчивое множество собрано',
        extra={'classes': ids, 'size': int(members.size)}
    )
    return GStableSet(class_ids=ids, members=members, single_class=len(ids) == 1)


def generates_group(T: ClassTable, ids) -> bool:
    members = np.concatenate([T[c].members for c in ids])
    G = T.group
    return G.generated_order(members, stop_at=G.order) == G.order
