from .verdict import Evidence, Verdict, VerdictBuilder, VerdictStatus
from .provider import GroupBundle, GroupProvider, LocalGroupProvider
from .procedures import (
    GENS_DIR,
    conjecture_scan,
    resolve_gens,
    verify_dihedral_strong,
    verify_product_graph,
    verify_psl2_unipotent,
    verify_psu3_c2_odd,
    verify_quotient_lifting,
    verify_rank_one_involutions,
    verify_strongly_p_embedded,
    verify_su3_fusion,
    verify_su3_unipotent,
    verify_sym_alt,
    verify_suzuki_order4,
    verify_unipotent_irreducible,
)
from .suite import DEFAULT_SUITE, Theorem, trace_id
