import functools
import itertools

import numpy as np
from sympy import factorint, isprime

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    """Остаток f mod g над GF(p); g унитарный, коэффициенты от младших."""
    r = list(f)
    dg = len(g) - 1
    for d in range(len(r) - 1, dg - 1, -1):
        c = r[d] % p
        if c:
            for i in range(dg + 1):
                r[d - dg + i] = (r[d - dg + i] - c * g[i]) % p
    return [c % p for c in r[:dg]]


def _is_irreducible(f: list[int], p: int) -> bool:
    k = len(f) - 1
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not any(_poly_rem(f, list(low) + [1], p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # перебор по коду младших коэффициентов: 0, 1, ..., p^k - 1
    for code in range(p ** k):
        low = [(code // p ** i) % p for i in range(k)]
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise EXC(ErrorCode.ConstructionError, details={'p': p, 'k': k})


class FieldCtx:
    """Поле GF(p^k): элементы кодируются числами sum c_i p^i."""

    MAX_DEGREE = 12
    MAX_SIZE = 2 ** 31
    TABLE_LIMIT = 1024

    def __init__(self, p: int, k: int):
        if not isprime(p):
            raise EXC(ErrorCode.ValidationError, details={'p': p})
        if not 1 <= k <= self.MAX_DEGREE or p ** k > self.MAX_SIZE:
            raise EXC(ErrorCode.ValidationError, details={'p': p, 'k': k})

        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = _smallest_irreducible(p, k)
        self._logger = ClassesLoggerAdapter.create(self)
        self._xi: int | None = None
        self._add: np.ndarray | None = None
        self._mul: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._exp: np.ndarray | None = None

    def __repr__(self) -> str:
        return f'GF({self.p}^{self.k})'

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.k) == (other.p, other.k)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    # --- коды <-> коэффициенты ---
    def coeffs(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.k)]

    def from_coeffs(self, coeffs: list[int]) -> int:
        p = self.p
        return sum((c % p) * p ** i for i, c in enumerate(coeffs))

    # --- арифметика на кодах ---
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_coeffs(
            [x + y for x, y in zip(self.coeffs(a), self.coeffs(b))]
        )

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return int(self._mul[a, b])
        if self.k == 1:
            return (a * b) % self.p
        p, k = self.p, self.k
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        return self.from_coeffs(_poly_rem(prod, list(self.modulus), p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise EXC(ErrorCode.NotInvertible, details={'field': repr(self)})
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, e: int = 1) -> int:
        return self.pow(a, self.p ** (e % self.k))

    @property
    def subfield_order(self) -> int:
        """Порядок подполя GF(q) внутри GF(q^2)."""
        if self.k % 2:
            raise EXC(
                ErrorCode.ValidationError,
                details={'reason': 'odd degree', 'field': repr(self)}
            )
        return self.p ** (self.k // 2)

    def trace_to_subfield(self, a: int) -> int:
        return self.add(a, self.pow(a, self.subfield_order))

    def norm_to_subfield(self, a: int) -> int:
        return self.pow(a, self.subfield_order + 1)

    # --- примитивный элемент ---
    @property
    def xi(self) -> int:
        if self._xi is None:
            self._xi = self._find_primitive()
        return self._xi

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        primes = list(factorint(n))
        for c in range(2, self.q):
            if all(self.pow(c, n // r) != 1 for r in primes):
                self._logger.debug(
                    'Найден примитивный элемент', extra={'xi': c}
                )
                return c
        raise EXC(ErrorCode.ConstructionError, details={'field': repr(self)})

    def element_order(self, a: int) -> int:
        if a == 0:
            raise EXC(ErrorCode.NotInvertible, details={'field': repr(self)})
        o = self.q - 1
        for r, e in factorint(o).items():
            for _ in range(e):
                if self.pow(a, o // r) == 1:
                    o //= r
                else:
                    break
        return o

    def fp_basis(self) -> list[int]:
        """Базис над GF(p): коды x^i."""
        return [self.p ** i for i in range(self.k)]

    # --- таблицы ---
    @property
    def has_tables(self) -> bool:
        return self.q <= self.TABLE_LIMIT

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Таблицы сложения и умножения (q x q) для векторных операций."""
        if self._add is None:
            if not self.has_tables:
                raise EXC(
                    ErrorCode.CapExceeded,
                    details={'field': repr(self), 'limit': self.TABLE_LIMIT}
                )
            self._build_tables()
        return self._add, self._mul

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        codes = np.arange(q, dtype=np.int64)
        weights = p ** np.arange(self.k, dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % p
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        add = (summed * weights).sum(axis=2).astype(np.uint16)

        xi = self.xi
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self.mul(cur, xi)
        exp[q - 1:] = exp[:q - 1]
        mul = np.zeros((q, q), dtype=np.uint16)
        nz = codes[1:]
        mul[1:, 1:] = exp[log[nz][:, None] + log[nz][None, :]]

        self._add, self._mul = add, mul
        self._log, self._exp = log, exp
        self._logger.info('Построены таблицы поля', extra={'q': q})


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FieldCtx:
    return FieldCtx(p, k)
