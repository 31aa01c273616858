"""Exact-arithmetic orthosymplectic super Yangians.

Rational R-matrices for arbitrary parity sequences, RTT algebras in
evaluation representations, Gauss decompositions, and mechanical
verification of the current-algebra relation catalogs.
"""

from .rings import (Poly, RationalFunction, Sqrt2, SQRT2, rat_parse, rat_str,
                    NonUnitLeadingCoefficient, PoleAtInfinity,
                    DegreeBoundExceeded, polynomial_identity_check)
from .series import (TruncatedSeries, MultivariateWindowSeries, WindowSeries,
                     expand_rational, series_invert, series_shift)
from .supermatrix import (ParitySequence, IndexData, SuperMatrix,
                          IndexOutOfRange, DepthOutOfRange,
                          all_parity_sequences, all_index_data,
                          graded_tensor, permutation_P, q_operator,
                          supertranspose, involution, theta)
from .rmatrix import (RMatrix, build_osp_R, build_gl_R, build_truncated_R,
                      check_ybe, unitarity_scalar)
from .liealgebra import (NonHomogeneous, UnsupportedRank,
                         GeneratorConstructionFailed, e_matrix, f_matrix,
                         f_basis_indices, osp_dimension, bracket,
                         element_parity, supertrace, invariant_form,
                         f_commutator_expected, RootDatum, CartanData,
                         DynkinDiagram, cartan_and_dynkin,
                         chevalley_generators, serre_verify,
                         classical_iso_check)
from .evaluation import (DuplicatePoints, PoleCollision, BadConstantTerm,
                         NotScalar, RepresentedT, CentralSeries,
                         evaluation_T, check_rtt_termwise, perturb_entry,
                         central_series, twist_mu, normalized_T,
                         iota_level1_check, w_parities)

from .gauss import (NonUnitPivot, GaussData, CurrentSet, gauss_decompose,
                    extract_currents, truncated_T, rank_reduction_check,
                    entry_identity_suite)

__version__ = "0.1.0"
