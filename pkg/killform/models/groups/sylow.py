import numpy as np
from sympy import isprime, multiplicity

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from .families import Family
from .group import Group
from .realization import MatrixRealization

_logger = ClassesLoggerAdapter.create('sylow')


class SylowStructure(Model):
    """Все силовские p-подгруппы (орбита стандартной) и флаг TI."""

    p: int
    subgroup_order: int
    subgroups: list[np.ndarray]
    normalizer_orders: list[int]
    ti: bool

    @property
    def count(self) -> int:
        return len(self.subgroups)


def _unitriangular_mask(G: Group, lower: bool) -> np.ndarray:
    R: MatrixRealization = G.realization
    d = R.dim
    strict = np.tril(np.ones((d, d), dtype=bool), -1)
    if lower:
        strict = strict.T
    mask = np.zeros(G.order, dtype=bool)
    for lam in R.scalars:
        m = R.scale(G.data, lam).reshape(-1, d, d)
        diag_ok = (np.diagonal(m, axis1=1, axis2=2) == 1).all(axis=1)
        zero_ok = (m[:, strict] == 0).all(axis=1)
        mask |= diag_ok & zero_ok
    return mask


def _standard_subgroup(G: Group, fam: Family, p: int) -> np.ndarray:
    if isinstance(G.realization, MatrixRealization):
        if p != G.realization.field.p:
            raise EXC(
                ErrorCode.UnsupportedFamily,
                details={'spec': G.kind.spec, 'p': p,
                         'reason': 'p is not the characteristic'}
            )
        return np.flatnonzero(
            _unitriangular_mask(G, lower=fam is Family.SZ)
        )

    if fam is Family.DIHEDRAL:
        n = int(G.kind.param)
        if p == 2 and n % 2:
            return np.array(sorted({0, int(G.generators[1])}))
        if p != 2 and n % p == 0:
            diff = (G.data[:, 1].astype(np.int64) - G.data[:, 0]) % n
            rotations = np.flatnonzero(diff == 1)
            pk = p ** multiplicity(p, n)
            orders = G.element_orders(rotations)
            return np.sort(rotations[pk % orders == 0])

    raise EXC(
        ErrorCode.UnsupportedFamily,
        details={'spec': G.kind.spec, 'p': p}
    )


def sylow_structure(G: Group, p: int) -> SylowStructure:
    if not isprime(p):
        raise EXC(ErrorCode.ValidationError, details={'p': p})
    fam = Family.from_string(G.kind.family)
    if fam is Family.PERM or (
            fam.is_permutation and fam is not Family.DIHEDRAL
    ):
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'spec': G.kind.spec, 'p': p}
        )

    standard = _standard_subgroup(G, fam, p)
    expected = p ** multiplicity(p, G.order)
    if standard.size != expected:
        raise EXC(
            ErrorCode.ConstructionError,
            details={'spec': G.kind.spec, 'p': p,
                     'expected': expected, 'found': int(standard.size)}
        )

    subgroups = [standard]
    seen = {standard.tobytes()}
    i = 0
    while i < len(subgroups):
        for s in G.generators:
            image = np.sort(G.conj(subgroups[i], s))
            key = image.tobytes()
            if key not in seen:
                seen.add(key)
                subgroups.append(image)
        i += 1

    counts = np.bincount(np.concatenate(subgroups), minlength=G.order)
    ti = bool(counts[1:].max(initial=0) <= 1)
    if fam.rank_one and not ti:
        _logger.warning(
            'Свойство TI не выполнено', extra={'spec': G.kind.spec, 'p': p}
        )
    _logger.info(
        'Силовские подгруппы найдены',
        extra={'spec': G.kind.spec, 'p': p, 'count': len(subgroups)}
    )
    normalizer = G.order // len(subgroups)
    return SylowStructure(
        p=p,
        subgroup_order=expected,
        subgroups=subgroups,
        normalizer_orders=[normalizer] * len(subgroups),
        ti=ti,
    )
