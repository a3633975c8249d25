"""Exact iterated sumsets NA in Z^d and the objects that control their growth."""

__version__ = "0.1.0"

from .errors import (BudgetExceeded, IncompleteFamilyError, InconclusiveError, SumsetLabError,
                     VerificationError)
from .khovanskii import (fit_polynomial, khovanskii_poly_general, khovanskii_poly_simplex,
                         khovanskii_thresholds)
from .lattice import (FiniteAbelianGroup, IntegerLattice, hermite_normal_form, quotient_group,
                      smith_normal_form)
from .minimal import (K_of, b_minimal_elements, davenport_constant, k_constant,
                      minimal_useless)
from .points import PointSet
from .polynomial import RationalPolynomial
from .polytope import (caratheodory_cover, convex_hull, cone_of, extremal_points,
                       normalized_volume)
from .solve import (bounded_kernel_basis, minimal_positive_solutions, positive_solution,
                    small_kernel_vector)
from .structure import structure_thresholds, verify_structure
from .sumset import (difference_lattice, exceptional_set, generated_lattice, growth_table,
                     psa_membership, sumset, width)
