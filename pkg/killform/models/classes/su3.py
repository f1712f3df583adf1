import math

import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ..ffield import FieldCtx
from ..groups import Family, Group, MatrixRealization
from .table import ClassTable, centralizer

_logger = ClassesLoggerAdapter.create('su3')


class Su3Signature(Model):
    """Тег семейства C1..C8 и данные, по которым он определён."""

    tag: str
    elt_order: int
    centralizer_order: int
    expected_centralizer: int
    eigenvalues: list[int]
    minpoly_degree: int
    all_norm_one: bool


def expected_centralizers(q: int) -> dict[str, int]:
    d = math.gcd(3, q + 1)
    return {
        'C2': q ** 3 * (q + 1),
        'C3': d * q * q,
        'C4': q * (q + 1) ** 2 * (q - 1),
        'C5': q * (q + 1),
        'C6': (q + 1) ** 2,
        'C7': q * q - 1,
        'C8': q * q - q + 1,
    }


def _matmul(F: FieldCtx, a: list[list[int]], b: list[list[int]]):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = F.add(acc, F.mul(a[i][k], b[k][j]))
            out[i][j] = acc
    return out


def _charpoly(F: FieldCtx, m: list[list[int]]) -> list[int]:
    """Коэффициенты det(xI - M) от младших: [c0, c1, c2, 1]."""
    add, mul, neg = F.add, F.mul, F.neg
    tr = add(add(m[0][0], m[1][1]), m[2][2])

    def minor(i, j):
        return F.sub(mul(m[i][i], m[j][j]), mul(m[i][j], m[j][i]))

    c2 = add(add(minor(0, 1), minor(0, 2)), minor(1, 2))
    det = 0
    for j, sign in ((0, 1), (1, -1), (2, 1)):
        rows = (1, 2)
        cols = [c for c in range(3) if c != j]
        sub = F.sub(
            mul(m[rows[0]][cols[0]], m[rows[1]][cols[1]]),
            mul(m[rows[0]][cols[1]], m[rows[1]][cols[0]]),
        )
        term = mul(m[0][j], sub)
        det = add(det, term if sign > 0 else neg(term))
    return [neg(det), c2, neg(tr), 1]


def _roots(F: FieldCtx, poly: list[int]) -> list[int]:
    """Корни многочлена в поле с кратностями (делением Горнера)."""
    roots = []
    poly = list(poly)
    while len(poly) > 1:
        found = None
        for z in range(F.q):
            acc = 0
            for c in reversed(poly):
                acc = F.add(F.mul(acc, z), c)
            if acc == 0:
                found = z
                break
        if found is None:
            break
        roots.append(found)
        # деление на (x - z)
        quotient = [0] * (len(poly) - 1)
        carry = 0
        for i in range(len(poly) - 1, 0, -1):
            carry = F.add(F.mul(carry, found), poly[i])
            quotient[i - 1] = carry
        poly = quotient
    return sorted(roots)


def _minpoly_degree(F: FieldCtx, m: list[list[int]]) -> int:
    n = len(m)
    off = [(i, j) for i in range(n) for j in range(n) if i != j and m[i][j]]
    if not off and all(m[i][i] == m[0][0] for i in range(n)):
        return 1
    sq = _matmul(F, m, m)
    if off:
        i, j = off[0]
        a = F.div(sq[i][j], m[i][j])
    else:
        i = 0
        j = next(j for j in range(n) if m[j][j] != m[0][0])
        a = F.div(F.sub(sq[i][i], sq[j][j]), F.sub(m[i][i], m[j][j]))
    b = F.sub(sq[0][0], F.mul(a, m[0][0]))
    for i in range(n):
        for j in range(n):
            rhs = F.mul(a, m[i][j])
            if i == j:
                rhs = F.add(rhs, b)
            if sq[i][j] != rhs:
                return 3
    return 2


def su3_family_classify(
        G: Group, x: int, table: ClassTable | None = None
) -> Su3Signature:
    """Сопоставляет элемент SU3(q) строке таблицы классов C1..C8."""
    if Family.from_string(G.kind.family) not in (Family.SU3, Family.GU3) \
            or G.kind.spec.endswith('/Z'):
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'spec': G.kind.spec, 'reason': 'expected su3:q'}
        )
    R: MatrixRealization = G.realization
    F = R.field
    q = F.subfield_order
    m = [[int(v) for v in row] for row in G.data[x].reshape(3, 3)]

    roots = _roots(F, _charpoly(F, m))
    degree = _minpoly_degree(F, m)
    norm_one = all(F.pow(r, q + 1) == 1 for r in roots)
    distinct = sorted(set(roots))

    if len(roots) == 0:
        tag = 'C8'
    elif len(roots) != 3:
        tag = None
    elif len(distinct) == 1:
        tag = {1: 'C1', 2: 'C2', 3: 'C3'}[degree]
    elif len(distinct) == 2:
        tag = 'C4' if degree == 2 else 'C5'
    else:
        tag = 'C6' if norm_one else 'C7'

    if table is not None:
        cent = table[table.class_of_element(x)].centralizer_order
    else:
        cent = int(centralizer(G, x).size)
    expected = G.order if tag == 'C1' else expected_centralizers(q).get(tag)
    if Family.from_string(G.kind.family) is Family.GU3 and tag not in (None, 'C1'):
        expected = None

    if tag is None or (expected is not None and expected != cent):
        raise EXC(
            ErrorCode.ConstructionError,
            details={
                'spec': G.kind.spec, 'element': G.describe(x),
                'tag': tag, 'centralizer_order': cent,
                'expected': expected, 'eigenvalues': roots,
            }
        )
    signature = Su3Signature(
        tag=tag,
        elt_order=G.element_order(x),
        centralizer_order=cent,
        expected_centralizer=expected if expected is not None else cent,
        eigenvalues=roots,
        minpoly_degree=degree,
        all_norm_one=norm_one,
    )
    if tag == 'C3' and roots[0] == 1 and signature.elt_order != F.p:
        _logger.info(
            'Унипотентный элемент C3 порядка не p',
            extra={'spec': G.kind.spec, 'order': signature.elt_order}
        )
    return signature


def classify_classes(T: ClassTable) -> dict[int, Su3Signature]:
    return {
        c.id: su3_family_classify(T.group, c.rep, T) for c in T.classes
    }
