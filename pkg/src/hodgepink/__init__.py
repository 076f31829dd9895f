"""Exact computations with (phi, N)-modules carrying Hodge-Pink lattices.

Scalars are rationals with a p-adic valuation; series in t (and in u on
the unit disc) are truncated with an explicit precision.
"""

from .admissibility import (HNFiltration, NewtonPoint, SlopeData, WAReport,
                            classify_spectrum, harder_narasimhan,
                            induced_subobject, is_weakly_admissible,
                            newton_membership, newton_point,
                            newton_preimage_search, stable_subspaces,
                            t_invariants)
from .arithmetic import (PrimeContext, ValuedRational, format_rational,
                         padic_valuation, parse_rational)
from .cocharacters import (Cocharacter, bruhat_leq, combinatorial_gap,
                           dimension_formulas, l_vector, reflex_degree)
from .dvr import (LatticeBasis, LaurentMatrix, SmithForm, exterior_lattice,
                  lattice_intersection, smith_exponents, standard_lattice)
from .errors import (HodgePinkError, InputError, InsufficientPrecision,
                     NotAUnit, NonzeroConstantTerm, RankDeficient,
                     UnsupportedSpectrum, WindowViolated)
from .hodge_pink import (HodgePinkLattice, KFiltration, bounded_by,
                         filtration_to_lattice, hodge_polygon,
                         lattice_to_filtration, validate_lattice)
from .phin import (JordanType, PhiNModule, adjoint_quotient_point,
                   degeneration_identity_check, generic_representative,
                   jordan_component, validate_module)
from .series import TruncatedLaurent, laurent_arith, log_one_minus
from .unit_disc import (EisensteinPoly, USeriesContext, eta_matrix,
                        is_zero_section, lambda_series, nnabla_commutator,
                        rank1_twist_factor)

__version__ = "0.1.0"
