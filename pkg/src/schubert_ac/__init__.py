"""Exact computer algebra for enriched Schubert polynomials in types A and C."""

from .basepoly import BasePoly
from .lambdapoly import (ChernSeries, DegreeBoundError, LambdaPoly, eta,
                         gamma_poly, gamma_schur_tableaux, omega, pieri,
                         schur_det, series_a, substitute, theta, tomega)
from .permutations import (Permutation, TripleA, bruhat_covers_right,
                           bruhat_leq, is_vexillary, k_rank, perm_to_triple,
                           triple_to_partition, triple_to_perm, w_lambda)
from .schubert import (classical_double, del_x, del_y, fgrs_coefficients,
                       multivariate_schur, schubert, schubert_vexillary,
                       stanley, twisted)
from .structure import (decompose_check, interpolate, invariance_check,
                        localize, monk, phi_compat_check, product_structure,
                        transition)
from .type_c import (GammaPoly, TripleC, ZCPoly, c_relation, normal_form,
                     pf_lambda, project_a_to_c, q_pfaffian,
                     schubert_c_vexillary, symmetric_locus_class)

__all__ = [
    "BasePoly", "LambdaPoly", "ChernSeries", "DegreeBoundError",
    "pieri", "schur_det", "series_a", "omega", "theta", "tomega", "eta",
    "substitute", "gamma_poly", "gamma_schur_tableaux",
    "Permutation", "TripleA", "k_rank", "is_vexillary", "bruhat_leq",
    "bruhat_covers_right", "triple_to_partition", "triple_to_perm",
    "perm_to_triple", "w_lambda",
    "schubert", "schubert_vexillary", "multivariate_schur", "twisted",
    "stanley", "fgrs_coefficients", "classical_double", "del_x", "del_y",
    "interpolate", "product_structure", "monk", "transition", "localize",
    "phi_compat_check", "invariance_check", "decompose_check",
    "ZCPoly", "GammaPoly", "TripleC", "c_relation", "q_pfaffian",
    "normal_form", "pf_lambda", "schubert_c_vexillary", "project_a_to_c",
    "symmetric_locus_class",
]
