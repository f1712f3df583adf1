import typing as t
from concurrent.futures import ThreadPoolExecutor

_T = t.TypeVar('_T')
_R = t.TypeVar('_R')


def map_ordered(
        fn: t.Callable[[_T], _R], items: t.Sequence[_T], threads: int = 1
) -> list[_R]:
    """map с сохранением порядка; при threads > 1 через пул потоков."""
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))


def split_rows(count: int, per_chunk: int) -> list[slice]:
    per_chunk = max(1, per_chunk)
    return [slice(i, min(i + per_chunk, count)) for i in range(0, count, per_chunk)]
