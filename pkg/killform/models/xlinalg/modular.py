import functools
import math

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt

from ...base_module import ClassesLoggerAdapter
from ..parallel import map_ordered
from .exact import DetMethod, DetResult, ExactMatrix

_logger = ClassesLoggerAdapter.create('modular')

# произведения двух вычетов помещаются в int64
PRIME_CEILING = 2 ** 31


@functools.lru_cache(maxsize=None)
def word_primes(count: int) -> tuple[int, ...]:
    primes, p = [], PRIME_CEILING
    for _ in range(count):
        p = prevprime(p)
        primes.append(p)
    return tuple(primes)


def hadamard_bound(M: ExactMatrix) -> int:
    """Целая верхняя оценка |det M| по Адамару."""
    prod = 1
    for row in M.rows:
        prod *= sum(v * v for v in row)
    return math.isqrt(prod) + 1


def det_mod(M: ExactMatrix, p: int) -> int:
    n = M.n
    if n == 0:
        return 1
    a = np.array([[v % p for v in row] for row in M.rows], dtype=np.int64)
    det = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k])
        if not nz.size:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        det = det * int(a[k, k]) % p
        inv = pow(int(a[k, k]), p - 2, p)
        factors = a[k + 1:, k] * inv % p
        a[k + 1:, k:] = (a[k + 1:, k:] - factors[:, None] * a[k, k:][None, :]) % p
    return det % p


def modular_det(
        M: ExactMatrix, only_nonzero: bool = False, threads: int = 1
) -> DetResult:
    """Определитель через вычеты по простым и КТО до удвоенной оценки Адамара."""
    first = word_primes(1)[0]
    r0 = det_mod(M, first)
    if only_nonzero and r0:
        return DetResult(
            nonzero=True, method=DetMethod.CERTIFICATE,
            certificate_prime=first, rank=M.n, primes_used=1,
        )

    bound = hadamard_bound(M)
    count, modulus = 1, first
    while modulus <= 2 * bound:
        count += 1
        modulus *= word_primes(count)[-1]
    primes = word_primes(count)
    residues = [r0] + map_ordered(
        lambda p: det_mod(M, p), list(primes[1:]), threads
    )

    value, total = crt(list(primes), residues)
    value, total = int(value), int(total)
    if value > total // 2:
        value -= total
    assert abs(value) <= bound, 'determinant exceeds the Hadamard bound'
    _logger.debug(
        'Определитель восстановлен по КТО',
        extra={'n': M.n, 'primes': count}
    )
    return DetResult(
        det=value, nonzero=value != 0,
        rank=M.n if value else None,
        method=DetMethod.MODULAR_CRT, primes_used=count,
    )
