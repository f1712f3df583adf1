from .ffield import FieldCtx, FieldElement, FieldOp, field_arith, field_make
from .groups import (
    Family,
    Group,
    GroupElement,
    GroupSpec,
    SylowStructure,
    make_group,
    quotient_by_center,
    sylow_structure,
)
from .classes import (
    ClassSelector,
    ClassTable,
    ConjClass,
    GStableSet,
    StableRequirements,
    build_stable_set,
    conjugacy_classes,
    is_real,
    su3_family_classify,
)
from .killing import (
    ClassSupportFn,
    ComponentReport,
    KillingMatrix,
    PartnerReport,
    killing_graph_components,
    killing_matrix,
    read_killing_csv,
    support_function,
)
from .xlinalg import DetResult, ExactMatrix, MillerResult, blockwise_det, exact_det
from .counting import TripleCount, class_product_histogram, triple_count
from .harness import (
    DEFAULT_SUITE,
    GroupBundle,
    GroupProvider,
    LocalGroupProvider,
    Theorem,
    Verdict,
    VerdictStatus,
    trace_id,
)
from .reports import ClassRow, CountReport, GroupInfo, KillingReport
