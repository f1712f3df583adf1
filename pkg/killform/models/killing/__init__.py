from .support import (
    ClassSupportFn,
    killing_rows,
    killing_value,
    support_function,
)
from .unionfind import UnionFind
from .graph import (
    ComponentReport,
    commuting_graph_components,
    killing_graph_components,
)
from .matrix import CSV_HEADER, KillingMatrix, killing_matrix, read_killing_csv
from .partners import PartnerReport, cross_sylow_partner_check
from .dot import graph_to_dot
