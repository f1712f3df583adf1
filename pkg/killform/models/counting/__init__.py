from .triples import (
    TripleCount,
    class_product_histogram,
    nonzero_pair_count,
    same_sylow_pair_count,
    suzuki_closed_forms,
    triple_count,
)
