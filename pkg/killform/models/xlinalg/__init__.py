from .exact import DetMethod, DetResult, ExactMatrix
from .bareiss import bareiss_det_rank
from .modular import det_mod, hadamard_bound, modular_det, word_primes
from .miller import MillerResult, miller_invertible
from .blocks import blockwise_det, exact_det
from .dihedral import dihedral_det_closed_form, dihedral_det_printed
