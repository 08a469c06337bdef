"""defolab: exact computer algebra for deformations of nonnormal surface
singularities — polynomial arithmetic over Q, Groebner bases, syzygies,
deformation families, and resolution-graph combinatorics.
"""

from .engine import StepCapExceeded
from .groebner import INFINITE, Ideal, GroebnerBasis, membership_witness
from .matrix import PolyMatrix
from .modules import (ContainmentError, ModuleVector, SyzygyModule,
                      module_membership, module_quotient_dim, syzygy_module)
from .orders import block, degrevlex, lex, wdegrevlex
from .ring import ParseError, PolyRing, Polynomial

__all__ = [
    "INFINITE", "ContainmentError", "GroebnerBasis", "Ideal", "ModuleVector",
    "ParseError", "PolyMatrix", "PolyRing", "Polynomial", "StepCapExceeded",
    "SyzygyModule", "block", "degrevlex", "lex", "membership_witness",
    "module_membership", "module_quotient_dim", "syzygy_module", "wdegrevlex",
]

__version__ = "0.1.0"
