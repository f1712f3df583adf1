from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode
from .exact import DetMethod, DetResult, ExactMatrix

_logger = ClassesLoggerAdapter.create('bareiss')


def _pivot(a: list[list[int]], k: int) -> tuple[int, int] | None:
    # минимальный ненулевой по модулю; при равенстве меньшая строка, затем столбец
    best = None
    n = len(a)
    for i in range(k, n):
        row = a[i]
        for j in range(k, n):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return None if best is None else best[1:]


def bareiss_det_rank(M: ExactMatrix, max_dim: int = 600) -> DetResult:
    """Определитель и ранг дробно-свободным исключением с полным выбором ведущего."""
    n = M.n
    if n > max_dim:
        raise EXC(
            ErrorCode.CapExceeded,
            details={'dimension': n, 'max_bareiss_dim': max_dim}
        )
    if n == 0:
        return DetResult(det=1, nonzero=True, rank=0, method=DetMethod.BAREISS)

    a = [row[:] for row in M.rows]
    sign, prev, rank = 1, 1, 0
    for k in range(n):
        found = _pivot(a, k)
        if found is None:
            break
        i, j = found
        if i != k:
            a[i], a[k] = a[k], a[i]
            sign = -sign
        if j != k:
            for row in a:
                row[j], row[k] = row[k], row[j]
            sign = -sign
        rank += 1
        pivot = a[k][k]
        ak = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ai[k + 1:] = [
                (pivot * x - aik * y) // prev
                for x, y in zip(ai[k + 1:], ak[k + 1:])
            ]
            ai[k] = 0
        prev = pivot

    det = sign * a[n - 1][n - 1] if rank == n else 0
    _logger.debug('Bareiss завершён', extra={'n': n, 'rank': rank})
    return DetResult(det=det, nonzero=det != 0, rank=rank, method=DetMethod.BAREISS)
