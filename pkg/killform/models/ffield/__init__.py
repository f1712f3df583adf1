from .ctx import FieldCtx, field_make
from .element import (
    FieldElement,
    FieldOp,
    field_arith,
    frobenius,
    trace_to_subfield,
)
