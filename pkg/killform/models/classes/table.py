import numpy as np
from pydantic import Field

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ..groups import Group, GroupElement


class ConjClass(Model):
    """Класс сопряжённости: представитель с минимальной кодировкой и члены."""

    id: int
    rep: int
    members: np.ndarray
    elt_order: int
    size: int
    centralizer_order: int

    @property
    def is_central(self) -> bool:
        return self.size == 1


class ClassTable(Model):
    """Разбиение группы на классы; class_of: индекс элемента -> id класса."""

    group: Group
    classes: list[ConjClass] = Field(default_factory=list)
    class_of: np.ndarray

    def __getitem__(self, cid: int) -> ConjClass:
        if not 0 <= cid < len(self.classes):
            raise EXC(
                ErrorCode.ValidationError,
                details={'class_id': cid, 'classes': len(self.classes)}
            )
        return self.classes[cid]

    def __len__(self) -> int:
        return len(self.classes)

    def inverse_class(self, cid: int) -> int:
        return int(self.class_of[self.group.inv(self[cid].rep)])

    def class_of_element(self, g: GroupElement | int) -> int:
        index = g.index if isinstance(g, GroupElement) else int(g)
        return int(self.class_of[index])


def _orbit_labels(G: Group, logger) -> tuple[np.ndarray, int]:
    class_of = np.full(G.order, -1, dtype=np.int64)
    gens = G.generators
    gens_inv = G.inv(gens)
    count = 0
    while True:
        pending = np.flatnonzero(class_of < 0)
        if not pending.size:
            break
        seed = int(pending[0])
        class_of[seed] = count
        frontier = np.array([seed])
        while frontier.size:
            # s x s^-1 для всех образующих
            left = G.mul(gens[None, :], frontier[:, None])
            images = np.unique(G.mul(left, gens_inv[None, :]))
            new = images[class_of[images] < 0]
            class_of[new] = count
            frontier = new
        count += 1
    logger.debug('Орбиты сопряжения найдены', extra={'orbits': count})
    return class_of, count


def conjugacy_classes(G: Group) -> ClassTable:
    logger = ClassesLoggerAdapter.create('ClassTable', spec=G.kind.spec)
    raw, count = _orbit_labels(G, logger)

    order = np.argsort(raw, kind='stable')
    bounds = np.cumsum(np.bincount(raw, minlength=count))[:-1]
    groups = np.split(order, bounds)
    rank = G.encoding_rank

    reps = np.array([g[np.argmin(rank[g])] for g in groups])
    orders = G.element_orders(reps)
    sort_key = sorted(
        range(count),
        key=lambda c: (int(orders[c]), groups[c].size, int(rank[reps[c]]))
    )

    class_of = np.empty(G.order, dtype=np.int64)
    classes = []
    for cid, old in enumerate(sort_key):
        members = np.sort(groups[old])
        class_of[members] = cid
        size = int(members.size)
        classes.append(ConjClass(
            id=cid,
            rep=int(reps[old]),
            members=members,
            elt_order=int(orders[old]),
            size=size,
            centralizer_order=G.order // size,
        ))
    logger.info(
        'Классы сопряжённости построены',
        extra={'order': G.order, 'classes': count}
    )
    return ClassTable(group=G, classes=classes, class_of=class_of)


def centralizer(G: Group, x: GroupElement | int) -> np.ndarray:
    """Все g с gx = xg (линейный просмотр группы)."""
    index = x.index if isinstance(x, GroupElement) else int(x)
    everything = np.arange(G.order)
    return everything[G.commute_mask(everything, index)]


def is_real(T: ClassTable, c: ConjClass | int) -> bool:
    cid = c.id if isinstance(c, ConjClass) else int(c)
    return T.inverse_class(cid) == cid
