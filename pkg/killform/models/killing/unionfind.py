import numpy as np


class UnionFind:
    """Система непересекающихся множеств на массивах numpy."""

    def __init__(self, n: int):
        self.parent = np.arange(n, dtype=np.int64)
        self.rank = np.zeros(n, dtype=np.int64)
        self.size = np.ones(n, dtype=np.int64)
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = int(self.parent[root])
        while self.parent[x] != root:
            self.parent[x], x = root, int(self.parent[x])
        return root

    def find_many(self, xs: np.ndarray) -> np.ndarray:
        roots = np.asarray(xs, dtype=np.int64)
        while True:
            up = self.parent[roots]
            if (up == roots).all():
                break
            roots = up
        self.parent[xs] = roots
        return roots

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.components -= 1
        return True

    def union_many(self, x: int, ys: np.ndarray) -> None:
        for root in np.unique(self.find_many(ys)).tolist():
            self.union(x, root)

    def labels(self) -> np.ndarray:
        """Номера компонент по порядку наименьшей вершины."""
        roots = self.find_many(np.arange(self.parent.size))
        _, first = np.unique(roots, return_index=True)
        order = np.argsort(first)
        relabel = np.empty(first.size, dtype=np.int64)
        relabel[order] = np.arange(first.size)
        _, inverse = np.unique(roots, return_inverse=True)
        return relabel[inverse]
