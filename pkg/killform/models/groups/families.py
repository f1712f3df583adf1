import enum
import math
import typing as t
from pathlib import Path

import numpy as np
from pydantic import Field, ValidationError, field_validator
from sympy import factorint

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ..ffield import FieldCtx, field_make
from .group import Group, GroupKind
from .realization import MatrixRealization, PermRealization

_logger = ClassesLoggerAdapter.create('families')


def _prime_power(q: int) -> tuple[int, int]:
    f = factorint(q)
    if q < 2 or len(f) != 1:
        raise EXC(ErrorCode.ValidationError, details={'q': q})
    (p, k), = f.items()
    return p, k


class Family(enum.Enum):
    """Семейства групп: тег, порядок по формуле, ранг один, псевдонимы."""

    CYCLIC = ('cyclic', lambda n: n, False, ['cyclic', 'c'])
    DIHEDRAL = ('dihedral', lambda n: 2 * n, False, ['dihedral', 'd'])
    SYM = ('sym', math.factorial, False, ['sym', 's'])
    ALT = ('alt', lambda n: math.factorial(n) // 2, False, ['alt', 'a'])
    SYMPROD = (
        'symprod', lambda n: math.factorial(n) ** 2, False,
        ['symprod', 'symxsym']
    )
    SL2 = ('sl2', lambda q: q * (q * q - 1), True, ['sl2'])
    GL2 = ('gl2', lambda q: (q * q - 1) * (q * q - q), True, ['gl2'])
    PSL2 = (
        'psl2', lambda q: q * (q * q - 1) // math.gcd(2, q - 1), True,
        ['psl2']
    )
    PGL2 = ('pgl2', lambda q: q * (q * q - 1), True, ['pgl2'])
    GU3 = (
        'gu3', lambda q: q ** 3 * (q + 1) * (q * q - 1) * (q ** 3 + 1), True,
        ['gu3']
    )
    SU3 = ('su3', lambda q: q ** 3 * (q * q - 1) * (q ** 3 + 1), True, ['su3'])
    PSU3 = (
        'psu3',
        lambda q: q ** 3 * (q * q - 1) * (q ** 3 + 1) // math.gcd(3, q + 1),
        True, ['psu3']
    )
    SZ = ('sz', lambda q: q * q * (q * q + 1) * (q - 1), True, ['sz', 'suzuki'])
    PERM = ('perm', None, False, ['perm'])

    def __init__(
            self,
            tag: str,
            order_fn: t.Callable[[int], int] | None,
            rank_one: bool,
            aliases: list[str],
    ):
        self.tag = tag
        self.order_fn = order_fn
        self.rank_one = rank_one
        self.aliases = aliases

    @property
    def is_permutation(self) -> bool:
        return self in (
            Family.CYCLIC, Family.DIHEDRAL, Family.SYM, Family.ALT,
            Family.SYMPROD, Family.PERM,
        )

    @classmethod
    def from_string(cls, tag: str) -> 'Family':
        for fam in cls:
            if tag in fam.aliases:
                return fam
        raise ValueError(
            f"Неизвестное семейство: '{tag}'. Доступные: {cls.get_all_aliases()}"
        )

    @classmethod
    def get_all_aliases(cls) -> list[str]:
        aliases = []
        for fam in cls:
            aliases.extend(fam.aliases)
        return aliases


class GroupSpec(Model):
    """Разобранная строка вида family:param."""

    family: Family
    param: str = Field(..., min_length=1)

    @field_validator('family', mode='before')
    @classmethod
    def validate_family(cls, v):
        if isinstance(v, str):
            return Family.from_string(v.strip().lower())
        return v

    @field_validator('param')
    @classmethod
    def validate_param(cls, v, info):
        fam = info.data.get('family')
        if fam is None or fam is Family.PERM:
            return v
        if not v.isdigit():
            raise ValueError(f"Параметр должен быть целым: '{v}'")
        value = int(v)
        if fam.is_permutation:
            low = 1 if fam is Family.CYCLIC else 3
            if fam in (Family.SYM, Family.SYMPROD):
                low = 2
            if value < low:
                raise ValueError(f'Слишком малая степень: {value}')
        else:
            p, k = _prime_power(value)
            if fam is Family.SZ and (p != 2 or k % 2 == 0):
                raise ValueError(f'Sz(q) требует q = 2^(2m+1): {value}')
        return v

    @classmethod
    def parse(cls, spec: str) -> 'GroupSpec':
        family, sep, param = spec.partition(':')
        if not sep:
            raise EXC(ErrorCode.ParseError, details={'spec': spec})
        try:
            return cls(family=family, param=param.strip())
        except (ValidationError, EXC) as e:
            reason = (
                [err['msg'] for err in e.errors()]
                if isinstance(e, ValidationError) else e.details
            )
            raise EXC(
                ErrorCode.ParseError, details={'spec': spec, 'reason': reason}
            )

    @property
    def n(self) -> int:
        return int(self.param)

    @property
    def text(self) -> str:
        return f'{self.family.tag}:{self.param}'

    def projected_order(self) -> int | None:
        if self.family.order_fn is None:
            return None
        return self.family.order_fn(self.n)


# --- перестановочные семейства ---
def _cycle(n: int, points: list[int], offset: int = 0, degree: int | None = None):
    row = np.arange(degree or n, dtype=np.uint8)
    for a, b in zip(points, points[1:] + points[:1]):
        row[a + offset] = b + offset
    return row


def _perm_generators(fam: Family, n: int) -> tuple[int, list[np.ndarray]]:
    match fam:
        case Family.CYCLIC:
            return n, [_cycle(n, list(range(n)))]
        case Family.DIHEDRAL:
            s = np.array([(n - i) % n for i in range(n)], dtype=np.uint8)
            return n, [_cycle(n, list(range(n))), s]
        case Family.SYM:
            return n, [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
        case Family.ALT:
            long = list(range(n)) if n % 2 else list(range(1, n))
            return n, [_cycle(n, [0, 1, 2]), _cycle(n, long)]
        case Family.SYMPROD:
            gens = []
            for offset in (0, n):
                gens.append(_cycle(n, [0, 1], offset, 2 * n))
                gens.append(_cycle(n, list(range(n)), offset, 2 * n))
            return 2 * n, gens
    raise EXC(ErrorCode.UnsupportedFamily, details={'family': fam.tag})


# --- матричные семейства ---
def _scalars(F: FieldCtx, predicate: t.Callable[[int], bool]) -> tuple[int, ...]:
    return tuple(c for c in range(1, F.q) if predicate(c))


def _sl2_generators(F: FieldCtx) -> list[list[list[int]]]:
    gens = []
    for b in F.fp_basis():
        gens.append([[1, b], [0, 1]])
        gens.append([[1, 0], [b, 1]])
    return gens


def _fp_basis_of(F: FieldCtx, elements: list[int]) -> list[int]:
    """Базис над GF(p) аддитивной подгруппы, заданной списком элементов."""
    span = {0}
    basis = []
    for e in sorted(elements):
        if e in span:
            continue
        basis.append(e)
        span = {F.add(s, F.mul(c, e)) for s in span for c in range(F.p)}
    return basis


def _unitary_root_generators(F: FieldCtx) -> list[list[list[int]]]:
    """Верхние и нижние корневые элементы SU3 для формы J = antidiag(1,1,1).

    U(a, b) = [[1, a, b], [0, 1, -a^q], [0, 0, 1]], где a^(q+1) + b + b^q = 0.
    """
    q = F.subfield_order
    trace = [F.trace_to_subfield(b) for b in range(F.q)]
    upper = []
    for a in F.fp_basis():
        target = F.neg(F.norm_to_subfield(a))
        b = next(c for c in range(F.q) if trace[c] == target)
        upper.append((a, b))
    kernel = [b for b in range(F.q) if trace[b] == 0]
    for b in _fp_basis_of(F, kernel):
        upper.append((0, b))

    gens = []
    for a, b in upper:
        m = [[1, a, b], [0, 1, F.neg(F.pow(a, q))], [0, 0, 1]]
        gens.append(m)
        gens.append([row[::-1] for row in m[::-1]])
    return gens


def _suzuki_generators(F: FieldCtx) -> list[list[list[int]]]:
    m = (F.k - 1) // 2
    theta = 2 ** (m + 1)

    def th(x: int) -> int:
        return F.pow(x, theta)

    def s(a: int, b: int) -> list[list[int]]:
        a2t = F.mul(F.mul(a, a), th(a))
        corner = F.add(F.add(a2t, F.mul(a, b)), th(b))
        return [
            [1, 0, 0, 0],
            [a, 1, 0, 0],
            [b, th(a), 1, 0],
            [corner, F.add(F.mul(a, th(a)), b), a, 1],
        ]

    gens = []
    for e in F.fp_basis():
        gens.append(s(e, 0))
        gens.append(s(0, e))
    kappa = F.xi
    half = 2 ** m
    gens.append([
        [F.pow(kappa, 1 + half) if i == j == 0 else
         F.pow(kappa, half) if i == j == 1 else
         F.pow(kappa, -half) if i == j == 2 else
         F.pow(kappa, -1 - half) if i == j == 3 else 0
         for j in range(4)]
        for i in range(4)
    ])
    gens.append([[1 if i + j == 3 else 0 for j in range(4)] for i in range(4)])
    return gens


def _matrix_setup(
        fam: Family, q: int
) -> tuple[MatrixRealization, list[list[list[int]]]]:
    p, k = _prime_power(q)
    match fam:
        case Family.SL2 | Family.PSL2 | Family.GL2 | Family.PGL2:
            F = field_make(p, k)
            gens = _sl2_generators(F)
            if fam in (Family.GL2, Family.PGL2):
                gens.append([[F.xi, 0], [0, 1]])
            if fam is Family.PSL2:
                scalars = _scalars(F, lambda c: F.mul(c, c) == 1)
            elif fam is Family.PGL2:
                scalars = _scalars(F, lambda c: True)
            else:
                scalars = (1,)
            return MatrixRealization(F, 2, scalars), gens
        case Family.SU3 | Family.GU3 | Family.PSU3:
            F = field_make(p, 2 * k)
            gens = _unitary_root_generators(F)
            if fam is Family.GU3:
                zeta = F.pow(F.xi, q - 1)
                gens.append([[1, 0, 0], [0, zeta, 0], [0, 0, 1]])
            scalars = (1,)
            if fam is Family.PSU3:
                scalars = _scalars(
                    F,
                    lambda c: F.pow(c, 3) == 1 and F.pow(c, q + 1) == 1
                )
            return MatrixRealization(F, 3, scalars), gens
        case Family.SZ:
            F = field_make(p, k)
            return MatrixRealization(F, 4), _suzuki_generators(F)
    raise EXC(ErrorCode.UnsupportedFamily, details={'family': fam.tag})


def make_group(spec: str | GroupSpec, max_order: int = 5_000_000) -> Group:
    """Строит и перечисляет группу по строке family:param."""
    spec = GroupSpec.parse(spec) if isinstance(spec, str) else spec
    fam = spec.family
    kind = GroupKind(family=fam.tag, param=spec.param, spec=spec.text)
    _logger.info('Построение группы', extra={'spec': spec.text})

    if fam is Family.PERM:
        from .perm_file import ingest_perm_generators
        return ingest_perm_generators(Path(spec.param), max_order=max_order)

    if fam.is_permutation:
        degree, gens = _perm_generators(fam, spec.n)
        realization = PermRealization(degree)
        rows = np.stack(gens)
    else:
        realization, gens = _matrix_setup(fam, spec.n)
        rows = np.stack([realization.matrix(g) for g in gens])

    return Group(
        kind, realization, rows,
        max_order=max_order,
        projected_order=spec.projected_order(),
    )


def quotient_by_center(G: Group) -> Group:
    """Фактор по центру матричной группы; элементы - минимальные представители смежных классов."""
    R = G.realization
    if not isinstance(R, MatrixRealization):
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'spec': G.kind.spec, 'reason': 'not a matrix group'}
        )
    d = R.dim
    F = R.field
    lams = set()
    for row in G.data[G.center()]:
        m = row.reshape(d, d)
        diag = int(m[0, 0])
        if (m != np.diag(np.full(d, diag))).any():
            raise EXC(
                ErrorCode.ConstructionError,
                details={'spec': G.kind.spec, 'center': R.describe(row)}
            )
        lams.add(diag)
    scalars = tuple(sorted({F.mul(l, s) for l in lams for s in R.scalars}))
    quotient = MatrixRealization(F, d, scalars)
    kind = GroupKind(
        family=G.kind.family,
        param=G.kind.param,
        spec=f'{G.kind.spec}/Z',
    )
    return Group(
        kind, quotient, G.data[G.generators],
        max_order=max(G.order, 1),
        projected_order=G.order // G.center().size,
    )
