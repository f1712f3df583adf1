from .table import (
    ClassTable,
    ConjClass,
    centralizer,
    conjugacy_classes,
    is_real,
)
from .selector import ClassSelector, SelectorKind, SelectorTerm
from .stable import (
    GStableSet,
    StableRequirements,
    build_stable_set,
    generates_group,
)
from .su3 import Su3Signature, classify_classes, expected_centralizers, su3_family_classify
