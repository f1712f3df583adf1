import typing as t

import numpy as np
from sympy import factorint

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from .realization import Realization


class GroupKind(Model):
    """Семейство и параметр группы (например, psl2 и 8)."""

    family: str
    param: str
    spec: str


class _ElementIndex:
    """Поиск индекса элемента по каноническому представлению."""

    def __init__(self, realization: Realization, data: np.ndarray):
        self._realization = realization
        keys = realization.keys(data)
        if keys is not None:
            self._order = np.argsort(keys, kind='stable')
            self._sorted = keys[self._order]
            self._map = None
        else:
            self._order = self._sorted = None
            self._map = {
                realization.encode(row): i for i, row in enumerate(data)
            }

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Индексы строк; -1 для отсутствующих."""
        if self._map is not None:
            encode = self._realization.encode
            return np.fromiter(
                (self._map.get(encode(row), -1) for row in rows),
                dtype=np.int64, count=rows.shape[0]
            )
        keys = self._realization.keys(rows)
        pos = np.searchsorted(self._sorted, keys)
        pos = np.minimum(pos, self._sorted.size - 1)
        found = self._sorted[pos] == keys
        return np.where(found, self._order[pos], -1)


class Group:
    """Конечная группа с полным перечислением элементов.

    Элемент задаётся плотным индексом; единица имеет индекс 0. Порядок
    перечисления детерминирован: обход в ширину от единицы, соседи каждого
    элемента упорядочены по кодировке.
    """

    def __init__(
            self,
            kind: GroupKind,
            realization: Realization,
            generators: np.ndarray,
            max_order: int = 5_000_000,
            projected_order: int | None = None,
    ):
        self.kind = kind
        self.realization = realization
        self._logger = ClassesLoggerAdapter.create(self, spec=kind.spec)
        if projected_order is not None and projected_order > max_order:
            raise EXC(
                ErrorCode.CapExceeded,
                details={
                    'spec': kind.spec,
                    'projected_order': projected_order,
                    'max_order': max_order,
                }
            )
        self._max_order = max_order
        gens = realization.canonical(
            np.atleast_2d(np.asarray(generators, dtype=realization.dtype))
        )
        self.data = self._enumerate(gens)
        self.order = int(self.data.shape[0])
        self._index = _ElementIndex(realization, self.data)
        self.generators = self.index_of(gens)

        self._inverse: np.ndarray | None = None
        self._center: np.ndarray | None = None
        self._rank: np.ndarray | None = None
        self._order_primes = factorint(self.order)

        if projected_order is not None and projected_order != self.order:
            raise EXC(
                ErrorCode.ConstructionError,
                details={
                    'spec': kind.spec,
                    'expected': projected_order,
                    'enumerated': self.order,
                }
            )
        self._logger.info('Группа перечислена', extra={'order': self.order})

    def __repr__(self) -> str:
        return f'Group({self.kind.spec}, order={self.order})'

    # --- перечисление ---
    def _enumerate(self, gens: np.ndarray) -> np.ndarray:
        R = self.realization
        ident = R.canonical(R.identity()[None, :])
        use_keys = R.keys(ident) is not None
        label = (
            (lambda rows: R.keys(rows).tolist()) if use_keys
            else (lambda rows: [R.encode(r) for r in rows])
        )

        seen = set(label(ident))
        layers = [ident]
        frontier = ident
        count = 1
        ngens = gens.shape[0]
        while frontier.shape[0]:
            parents = np.repeat(frontier, ngens, axis=0)
            prods = R.multiply(parents, np.tile(gens, (frontier.shape[0], 1)))
            labels = label(prods)
            # внутри родителя соседи по возрастанию кодировки
            order = sorted(
                range(len(labels)),
                key=lambda i: (i // ngens, labels[i])
            )
            fresh = []
            for i in order:
                lab = labels[i]
                if lab not in seen:
                    seen.add(lab)
                    fresh.append(i)
            count += len(fresh)
            if count > self._max_order:
                raise EXC(
                    ErrorCode.CapExceeded,
                    details={
                        'spec': self.kind.spec,
                        'enumerated': count,
                        'max_order': self._max_order,
                    }
                )
            frontier = prods[np.asarray(fresh, dtype=np.intp)]
            if frontier.shape[0]:
                layers.append(frontier)
        return np.ascontiguousarray(np.concatenate(layers))

    # --- поиск ---
    def index_of(self, rows: np.ndarray, strict: bool = True) -> np.ndarray:
        rows = np.atleast_2d(rows)
        idx = self._index.lookup(rows)
        if strict and (idx < 0).any():
            raise EXC(
                ErrorCode.MembershipError,
                details={
                    'spec': self.kind.spec,
                    'missing': self.realization.describe(rows[idx < 0][0]),
                }
            )
        return idx

    def encode(self, i: int) -> bytes:
        return self.realization.encode(self.data[i])

    def decode(self, blob: bytes) -> int:
        row = self.realization.canonical(self.realization.decode(blob)[None, :])
        return int(self.index_of(row)[0])

    def describe(self, i: int) -> str:
        return self.realization.describe(self.data[i])

    @property
    def encoding_rank(self) -> np.ndarray:
        """Ранг каждого элемента в лексикографическом порядке кодировок."""
        if self._rank is None:
            order = np.lexsort(self.data.T[::-1])
            rank = np.empty(self.order, dtype=np.int64)
            rank[order] = np.arange(self.order)
            self._rank = rank
        return self._rank

    # --- умножение ---
    def mul(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        shape = a.shape
        rows = self.realization.multiply(
            self.data[a.reshape(-1)], self.data[b.reshape(-1)]
        )
        return self.index_of(rows).reshape(shape)

    def mul_rows(self, a, b) -> np.ndarray:
        """Произведения как канонические строки, без поиска индексов."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        return self.realization.multiply(
            self.data[a.reshape(-1)], self.data[b.reshape(-1)]
        )

    @property
    def inverse_table(self) -> np.ndarray:
        if self._inverse is None:
            rows = self.realization.invert(self.data)
            if rows is None:
                rows = self.pow_rows(
                    self.data, np.full(self.order, self.order - 1)
                )
            self._inverse = self.index_of(self.realization.canonical(rows))
        return self._inverse

    def inv(self, a) -> np.ndarray:
        return self.inverse_table[np.asarray(a)]

    def conj(self, g, h) -> np.ndarray:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def commute_mask(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        ab = self.mul_rows(a, b)
        ba = self.mul_rows(b, a)
        return (ab == ba).all(axis=1).reshape(a.shape)

    # --- степени и порядки ---
    @property
    def identity_row(self) -> np.ndarray:
        return self.data[0]

    def is_identity_rows(self, rows: np.ndarray) -> np.ndarray:
        return (rows == self.identity_row).all(axis=1)

    def pow_rows(self, rows: np.ndarray, exps) -> np.ndarray:
        """Построчное возведение в степень (показатели неотрицательны)."""
        R = self.realization
        exps = np.broadcast_to(np.asarray(exps, dtype=object), rows.shape[:1])
        exps = [int(e) for e in exps]
        result = np.tile(self.data[0], (rows.shape[0], 1))
        base = rows.copy()
        while any(exps):
            bits = np.fromiter((e & 1 for e in exps), dtype=bool,
                               count=len(exps))
            if bits.any():
                result[bits] = R.multiply(result[bits], base[bits])
            exps = [e >> 1 for e in exps]
            live = np.fromiter((e > 0 for e in exps), dtype=bool,
                               count=len(exps))
            if live.any():
                base[live] = R.multiply(base[live], base[live])
        return result

    def power(self, a, e: int) -> np.ndarray:
        a = np.asarray(a)
        rows = self.pow_rows(self.data[a.reshape(-1)], e)
        return self.index_of(rows).reshape(a.shape)

    def element_orders(self, idx) -> np.ndarray:
        idx = np.atleast_1d(np.asarray(idx))
        rows = self.data[idx]
        orders = np.full(idx.shape[0], self.order, dtype=object)
        for r, e in self._order_primes.items():
            for _ in range(e):
                cand = np.array([o // r if o % r == 0 else o for o in orders],
                                dtype=object)
                hit = self.is_identity_rows(self.pow_rows(rows, cand))
                shrink = hit & np.array([o % r == 0 for o in orders])
                if not shrink.any():
                    break
                orders[shrink] = cand[shrink]
        return orders.astype(np.int64)

    def element_order(self, i: int) -> int:
        return int(self.element_orders([i])[0])

    # --- подгруппы ---
    def center(self) -> np.ndarray:
        if self._center is None:
            everything = np.arange(self.order)
            mask = np.ones(self.order, dtype=bool)
            for s in self.generators:
                mask &= self.commute_mask(everything, s)
            self._center = np.flatnonzero(mask)
        return self._center

    def generated_order(
            self, elements: t.Iterable[int], stop_at: int | None = None
    ) -> int:
        """Порядок подгруппы, порождённой элементами (замыкание)."""
        inside = np.zeros(self.order, dtype=bool)
        inside[0] = True
        gens: list[int] = []
        members = np.array([0], dtype=np.int64)
        for g in elements:
            g = int(g)
            if inside[g]:
                continue
            gens.append(g)
            frontier = members
            while frontier.size:
                prods = self.mul(frontier[:, None], np.asarray(gens)[None, :])
                prods = np.unique(prods)
                new = prods[~inside[prods]]
                inside[new] = True
                frontier = new
            members = np.flatnonzero(inside)
            if stop_at is not None and members.size >= stop_at:
                break
        return int(inside.sum())

    def element(self, i: int) -> 'GroupElement':
        from .element import GroupElement
        return GroupElement(self, int(i))
