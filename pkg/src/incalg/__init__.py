"""Exact-arithmetic toolkit for incidence algebras of finite preordered sets.

Convolution, inversion, and the Mobius function; classification of
multiplicative automorphisms and additive derivations through cocycles on the
quotient poset; a brute-force derivation solver for cross-checking; reduced
incidence algebras; and a JSON command-line interface.
"""

from .algebra import (IncFunction, basis_function, convolve, delta,
                      filtration_level, hadamard, in_radical_fn, invert,
                      mobius, split, to_structural, zeta)
from .automorph import (AutDecomposition, BasisTable, MultCocycle, apply_mult,
                        decompose_mult, diagonalize, fractional_cocycle,
                        full_decompose, mult_cocycle, ordinal, recompose,
                        verify_automorphism)
from .derivation import (AddCocycle, DerivSpaceReport, TriCycleMatrix,
                         add_cocycle, apply_deriv, decompose_add,
                         derivation_space, potential_cocycle, triangle_matrix)
from .errors import DomainError, InputError
from .oracle import (DerivTable, brute_derivations, diagonalize_derivation,
                     triangularize_derivation)
from .poset import (Preorder, QuotientPoset, build_preorder, comparability,
                    poset_automorphisms, quotient, spanning_forest, triangles)
from .reduced import (CoefTable, ReducedElem, Reduction, check_order_compatible,
                      coefficients, lift, project, reduced_convolve,
                      standard_types)
from .rings import RingElem, RingSpec, format_elem, parse_elem, parse_ring

__version__ = "0.1.0"
