"""Exact tools for (strictly) Neumaier graphs: parameter feasibility,
Cayley-graph constructions with coclique spreads, Jacobi-sum counting, and
quadratic-ring prime searches."""

from .cayley import (CayleySpec, Construction, FusionSpec, GenSet, Spread,
                     StrictnessResult, construct_neumaier, fuse, fused_clique,
                     gamma_pq, gen_set, strictness_check)
from .charsums import (CharContext, CyclotomicInt, Mod6Prediction, QuadDecomp,
                       closed_form_n6, closed_form_q5, closed_form_q7,
                       count_closed, count_direct, count_jacobi,
                       cyclotomic_polynomial, fermat_vanishing, jacobi_sum,
                       mod6_predict, quad_decomp, rsuv_split)
from .feasibility import (NeumaierParams, Verdict, co_edge_defect,
                          complement_defect, corollary_complement_test,
                          enumerate_feasible, erg_conditions,
                          neumaier_conditions, strict_conditions,
                          theorem_family_6l3)
from .graphs import (Graph, RegularityReport, VertexSubset, is_regular_subset,
                     is_strictly_neumaier, regularity_report, verify_neumaier)
from .primesearch import (AdmissiblePQ, Assembly, ConicSolution,
                          QuadraticRingElt, SearchResult, SearchRow,
                          admissible, assemble_from_eisenstein,
                          assemble_from_gaussian, canonical_subgroup_rep,
                          conic_solve, factorize, find_a, is_prime,
                          scan_quadratic_primes, search_triples)

__version__ = "0.1.0"
