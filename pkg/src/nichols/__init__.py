"""Exact computation in Nichols algebras of diagonal type.

The package works over cyclotomic numbers (exact arithmetic, no floats):
free noncommutative polynomials, the skew-derivation pairing that detects
vanishing in the Nichols algebra quotient, the braided and plain bracket
Lie subspaces with span-membership oracles, diagram-graph structure
checks, and positive-root dimension counts with three independent
computations cross-checking each other.
"""

from .braiding import (BraidingMatrix, CartanSpec, cartan_braiding, cartan_edges,
                       chi, p, ptilde)
from .catalog import CATALOG, a_chain, catalog, quantum_linear
from .freealg import (NCPolynomial, braided_bracket, bracket_identity_check,
                      generator, left_normed_minus, minus_bracket,
                      mixed_identity_check, word_degree)
from .graphs import (VertexGraph, aug_graph, component_decomposition, is_connected,
                     is_weakly_disconnected, pure_graph, support)
from .oracle import (BRAIDED, MINUS, Oracle, coordinates, dim_component, get_oracle,
                     in_L, is_zero_in_nichols, lie_space_basis,
                     nonzero_by_order_criterion, power_pairing, skew_derive,
                     span_membership)
from .rootdims import (PBWMonomial, RootSystem, cartan_matrix, count_B,
                       count_connected_oracle, dim_L_closed, dim_L_recursive,
                       dimension_report, enumerate_pbw_basis, positive_roots)
from .scalars import (CycNumber, RootFraction, cyclotomic_polynomial, embed,
                      mult_order, q_factorial, q_int)
from .structure import (CommutingFamily, Rank2Basis, SweepReport, all_bracketings,
                        apply_bracketing, closed_form_left_normed,
                        decide_lie_variants_coincide, decide_minus_lie_complement,
                        ladder_closed_form, ladder_expansion, ladder_monomial,
                        quantum_linear_rank2_basis, rank2_membership,
                        verify_connectivity_criterion,
                        verify_disconnected_brackets_vanish)

__version__ = "0.1.0"

__all__ = [
    "BRAIDED",
    "BraidingMatrix",
    "CATALOG",
    "CartanSpec",
    "CommutingFamily",
    "CycNumber",
    "MINUS",
    "NCPolynomial",
    "Oracle",
    "PBWMonomial",
    "Rank2Basis",
    "RootFraction",
    "RootSystem",
    "SweepReport",
    "VertexGraph",
    "a_chain",
    "all_bracketings",
    "apply_bracketing",
    "aug_graph",
    "braided_bracket",
    "bracket_identity_check",
    "cartan_braiding",
    "cartan_edges",
    "cartan_matrix",
    "catalog",
    "chi",
    "closed_form_left_normed",
    "component_decomposition",
    "coordinates",
    "count_B",
    "count_connected_oracle",
    "cyclotomic_polynomial",
    "decide_lie_variants_coincide",
    "decide_minus_lie_complement",
    "dim_L_closed",
    "dim_L_recursive",
    "dim_component",
    "dimension_report",
    "embed",
    "enumerate_pbw_basis",
    "generator",
    "get_oracle",
    "in_L",
    "is_connected",
    "is_weakly_disconnected",
    "is_zero_in_nichols",
    "ladder_closed_form",
    "ladder_expansion",
    "ladder_monomial",
    "left_normed_minus",
    "lie_space_basis",
    "minus_bracket",
    "mixed_identity_check",
    "mult_order",
    "nonzero_by_order_criterion",
    "p",
    "positive_roots",
    "power_pairing",
    "ptilde",
    "pure_graph",
    "q_factorial",
    "q_int",
    "quantum_linear",
    "quantum_linear_rank2_basis",
    "rank2_membership",
    "skew_derive",
    "span_membership",
    "support",
    "verify_connectivity_criterion",
    "verify_disconnected_brackets_vanish",
    "word_degree",
]
