import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode
from ...config import KillformConfig
from ..killing import ClassSupportFn, KillingMatrix
from .bareiss import bareiss_det_rank
from .exact import DetMethod, DetResult, ExactMatrix
from .modular import modular_det

_logger = ClassesLoggerAdapter.create('blocks')


def exact_det(
        M: ExactMatrix,
        config: KillformConfig | None = None,
        only_nonzero: bool = False,
) -> DetResult:
    """Bareiss для малых размеров, иначе вычеты и КТО."""
    config = config or KillformConfig()
    if M.n <= config.caps.max_bareiss_dim:
        return bareiss_det_rank(M, config.caps.max_bareiss_dim)
    return modular_det(M, only_nonzero, config.parallel.threads)


def _similarity_map(fn: ClassSupportFn, K: KillingMatrix) -> np.ndarray:
    """Позиции образов вершин блока 0 в блоке 1 при сопряжении элементом группы."""
    G = fn.group
    (s0, n0), (s1, n1) = K.blocks[0], K.blocks[1]
    source = K.ordering[s0:s0 + n0]
    target = K.ordering[s1:s1 + n1]
    everything = np.arange(G.order)
    images = G.mul(G.mul(everything, source[0]), G.inv(everything))
    hits = np.flatnonzero(np.isin(images, target))
    if not hits.size:
        raise EXC(ErrorCode.ConstructionError, details={'reason': 'blocks not conjugate'})
    h = int(hits[0])
    mapped = G.conj(source, h)
    position = {int(v): i for i, v in enumerate(K.ordering)}
    return np.array([position[int(v)] for v in mapped])


def blockwise_det(
        K: KillingMatrix,
        fn: ClassSupportFn | None = None,
        config: KillformConfig | None = None,
) -> DetResult:
    config = config or KillformConfig()
    if K.component_count <= 1:
        return exact_det(ExactMatrix.from_numpy(K.entries), config)

    if not K.off_block_zero():
        raise EXC(ErrorCode.ConstructionError, details={'reason': 'K is not block diagonal'})

    if fn is not None and fn.set.single_class:
        s0, n0 = K.blocks[0]
        first = exact_det(ExactMatrix.from_numpy(K.block(0)), config)
        perm = _similarity_map(fn, K)
        if not (perm >= K.blocks[1][0]).all() or \
                not (perm < K.blocks[1][0] + K.blocks[1][1]).all():
            raise EXC(ErrorCode.ConstructionError, details={'reason': 'blocks not similar'})
        if not (K.entries[np.ix_(perm, perm)] == K.block(0)).all():
            raise EXC(ErrorCode.ConstructionError, details={'reason': 'blocks not similar'})
        count = K.component_count
        det = first.det ** count
        _logger.info(
            'Определитель по блокам',
            extra={'blocks': count, 'block_size': n0, 'nonzero': det != 0}
        )
        return DetResult(
            det=det, nonzero=det != 0,
            rank=first.rank * count if first.rank is not None else None,
            method=DetMethod.BLOCKWISE,
        )

    det, rank = 1, 0
    for i in range(K.component_count):
        part = exact_det(ExactMatrix.from_numpy(K.block(i)), config)
        det *= part.det
        rank += part.rank or 0
    return DetResult(det=det, nonzero=det != 0, rank=rank, method=DetMethod.BLOCKWISE)
