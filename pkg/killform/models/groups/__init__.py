from .realization import (
    MatrixRealization,
    PermRealization,
    Realization,
    cycle_notation,
)
from .group import Group, GroupKind
from .element import ElemOp, GroupElement, elem_op
from .families import Family, GroupSpec, make_group, quotient_by_center
from .perm_file import ingest_perm_generators, parse_perm_generators
from .sylow import SylowStructure, sylow_structure
