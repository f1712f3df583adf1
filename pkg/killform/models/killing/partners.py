import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ..classes import ClassTable, GStableSet
from ..groups import Family, SylowStructure
from .support import ClassSupportFn, killing_rows

_logger = ClassesLoggerAdapter.create('partners')


class PartnerReport(Model):
    """Единственность партнёра y в чужой силовской подгруппе."""

    pairs_checked: int
    unique: bool
    partner_counts: dict[int, int]
    killing_matches_partner: bool
    permutation_blocks: bool
    block_value: int


def _unipotent_times_central(T: ClassTable, products: np.ndarray, p: int) -> np.ndarray:
    G = T.group
    center = np.zeros(G.order, dtype=bool)
    center[G.center()] = True
    flat = products.reshape(-1)
    powered = G.power(flat, p)
    return (~center[flat] & center[powered]).reshape(products.shape)


def cross_sylow_partner_check(
        fn: ClassSupportFn, sylow: SylowStructure
) -> PartnerReport:
    T = fn.table
    G = T.group
    fam = Family.from_string(G.kind.family)
    q = int(G.kind.param)
    if fam not in (Family.SL2, Family.PSL2) or q % 2 == 0:
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'spec': G.kind.spec, 'reason': 'expected sl2/psl2 with odd q'}
        )
    C: GStableSet = fn.set
    blocks = [sub[C.contains(sub)] for sub in sylow.subgroups]
    s1 = blocks[0]

    counts: dict[int, int] = {}
    checked = 0
    killing_matches = True
    for j, other in enumerate(blocks[1:], 1):
        products = G.mul(s1[:, None], other[None, :])
        partner = _unipotent_times_central(T, products, sylow.p)
        values = fn.values_for_products(products)
        killing_matches &= bool(((values > 0) == partner).all())
        for c in partner.sum(axis=1).tolist():
            counts[c] = counts.get(c, 0) + 1
        checked += s1.size

    value = (q - 1) // 2
    permutation = True
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            if i == j:
                continue
            a = killing_rows(fn, bi, bj)
            nz = a != 0
            if not (
                    (nz.sum(axis=1) == 1).all()
                    and (nz.sum(axis=0) == 1).all()
                    and (a[nz] == value).all()
            ):
                permutation = False
                break
        if not permutation:
            break

    unique = set(counts) == {1}
    _logger.info(
        'Проверка партнёров завершена',
        extra={'spec': G.kind.spec, 'pairs': checked, 'unique': unique}
    )
    return PartnerReport(
        pairs_checked=checked,
        unique=unique,
        partner_counts=counts,
        killing_matches_partner=killing_matches,
        permutation_blocks=permutation,
        block_value=value,
    )
