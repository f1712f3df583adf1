import inspect
import typing as t
from enum import Enum

from ...base_module import EXC, ErrorCode
from . import procedures
from .provider import GroupProvider
from .verdict import Verdict


class Theorem(Enum):
    """Процедуры проверки: тег, функция, обязательные параметры, псевдонимы."""
    RANK1_INVOLUTIONS = (
        'rank1-involutions', procedures.verify_rank_one_involutions,
        ('q',), ['rank1-involutions', 'rank-one-involutions']
    )
    UNIPOTENT_IRREDUCIBLE = (
        'unipotent-irreducible', procedures.verify_unipotent_irreducible,
        ('spec', 'p'), ['unipotent-irreducible', 'unipotent']
    )
    PSU3_C2_ODD = (
        'psu3-c2-odd', procedures.verify_psu3_c2_odd, ('q',), ['psu3-c2-odd']
    )
    SYM_ALT = ('sym-alt', procedures.verify_sym_alt, ('n',), ['sym-alt'])
    DIHEDRAL_STRONG = (
        'dihedral-strong', procedures.verify_dihedral_strong,
        ('n',), ['dihedral-strong', 'dihedral']
    )
    CONJECTURE_SCAN = (
        'conjecture-scan', procedures.conjecture_scan,
        ('spec',), ['conjecture-scan', 'scan']
    )
    PSL2_UNIPOTENT = (
        'psl2-unipotent', procedures.verify_psl2_unipotent, ('q',), ['psl2-unipotent']
    )
    SUZUKI_ORDER4 = (
        'suzuki-order4', procedures.verify_suzuki_order4, (), ['suzuki-order4']
    )
    QUOTIENT_LIFTING = (
        'quotient-lifting', procedures.verify_quotient_lifting,
        ('q',), ['quotient-lifting']
    )
    PRODUCT_GRAPH = (
        'product-graph', procedures.verify_product_graph, (), ['product-graph']
    )
    STRONGLY_P_EMBEDDED = (
        'strongly-p-embedded', procedures.verify_strongly_p_embedded,
        ('gens',), ['strongly-p-embedded']
    )
    SU3_UNIPOTENT = (
        'su3-unipotent', procedures.verify_su3_unipotent, ('q',), ['su3-unipotent']
    )
    SU3_FUSION = (
        'su3-fusion', procedures.verify_su3_fusion, ('q',), ['su3-fusion']
    )

    def __init__(
            self,
            tag: str,
            procedure: t.Callable[..., Verdict],
            required: tuple[str, ...],
            aliases: list[str],
    ):
        self.tag = tag
        self.procedure = procedure
        self.required = required
        self.aliases = aliases

    def __str__(self):
        return self.tag

    def run(self, provider: GroupProvider, **params) -> Verdict:
        missing = [name for name in self.required if params.get(name) is None]
        if missing:
            raise EXC(
                ErrorCode.UsageError,
                details={'theorem': self.tag, 'missing': missing}
            )
        params = {k: v for k, v in params.items() if v is not None}
        try:
            inspect.signature(self.procedure).bind(provider, **params)
        except TypeError as e:
            raise EXC(
                ErrorCode.UsageError,
                details={'theorem': self.tag, 'reason': str(e)}
            )
        return self.procedure(provider, **params)

    @classmethod
    def from_string(cls, tag: str) -> 'Theorem':
        for theorem in cls:
            if tag in theorem.aliases:
                return theorem
        raise ValueError(
            f"Неизвестная проверка: '{tag}'. Доступные: {cls.get_all_aliases()}")

    @classmethod
    def get_all_aliases(cls) -> list[str]:
        aliases = []
        for theorem in cls:
            aliases.extend(theorem.aliases)
        return aliases


# набор по умолчанию для `verify all`
DEFAULT_SUITE: list[tuple[Theorem, dict[str, t.Any]]] = [
    *[(Theorem.RANK1_INVOLUTIONS, {'family': 'psl2', 'q': q}) for q in (4, 5, 8, 16)],
    (Theorem.RANK1_INVOLUTIONS, {'family': 'psu3', 'q': 4}),
    (Theorem.RANK1_INVOLUTIONS, {'family': 'sz', 'q': 8}),
    *[(Theorem.PSL2_UNIPOTENT, {'q': q}) for q in (5, 7, 9, 13)],
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'psl2:9', 'p': 3}),
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'su3:4', 'p': 2}),
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'sz:8', 'p': 2}),
    *[(Theorem.PSU3_C2_ODD, {'q': q}) for q in (3, 5)],
    *[(Theorem.SU3_UNIPOTENT, {'q': q}) for q in (3, 5)],
    (Theorem.SU3_FUSION, {'q': 2}),
    (Theorem.SUZUKI_ORDER4, {'q': 8}),
    *[(Theorem.SYM_ALT, {'n': n}) for n in range(4, 11)],
    *[(Theorem.DIHEDRAL_STRONG, {'n': n}) for n in range(3, 16, 2)],
    (Theorem.CONJECTURE_SCAN, {'spec': 'psl2:5'}),
    (Theorem.CONJECTURE_SCAN, {'spec': 'psl2:13'}),
    *[(Theorem.QUOTIENT_LIFTING, {'q': q}) for q in (5, 7, 9)],
    (Theorem.PRODUCT_GRAPH, {'n': 5}),
    (Theorem.STRONGLY_P_EMBEDDED, {'gens': 'm11.gens', 'p': 3}),
    (Theorem.STRONGLY_P_EMBEDDED, {'gens': 'psl3_4.gens', 'p': 3}),
]


def trace_id(theorem: Theorem, params: dict[str, t.Any]) -> str:
    """Детерминированный идентификатор трассы вида tag:k=v,..."""
    body = ','.join(f'{k}={params[k]}' for k in sorted(params) if params[k] is not None)
    return f'{theorem.tag}:{body}' if body else theorem.tag
