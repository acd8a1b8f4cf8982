"""Global minimal models and reduction types of elliptic curves with prescribed torsion."""

__version__ = "0.1.0"

from .arith import FactoredInteger, factor
from .core import (AdmissibleChange, CurveInvariants, SingularModelError, WeierstrassModel,
                   add_points, invariants, multiply_point, point_order, transform, valuation)
from .families import (FamilyInvariants, FamilyParams, TorsionFamily, build_ET,
                       delta_constant, family_invariants, rescale_factor_wT, universal_curve)
from .minimality import (MinimalityResult, compute_uT, frey_minimal, global_minimal_model,
                         kraus_admissible, lkc_minimal_model, minimal_discriminant,
                         table_minimal)
from .normalization import (CanonicalParams, canonicalize, cube_square_decompose,
                            squarefree_decompose)
from .recognition import (Identification, RecognitionError, TateNormalForm, identify,
                          recover_t, tate_normal_form, translate_to_origin)
from .reduction import (ReductionReport, additive_primes, additive_primes_general,
                        fixed_additive_set, is_semistable, minimal_invariants_odd)

__all__ = [
    "FactoredInteger", "factor", "AdmissibleChange", "CurveInvariants", "SingularModelError",
    "WeierstrassModel", "add_points", "invariants", "multiply_point", "point_order",
    "transform", "valuation", "FamilyInvariants", "FamilyParams", "TorsionFamily",
    "build_ET", "delta_constant", "family_invariants", "rescale_factor_wT",
    "universal_curve", "MinimalityResult", "compute_uT", "frey_minimal",
    "global_minimal_model", "kraus_admissible", "lkc_minimal_model", "minimal_discriminant",
    "table_minimal", "CanonicalParams", "canonicalize", "cube_square_decompose",
    "squarefree_decompose", "Identification", "RecognitionError", "TateNormalForm",
    "identify", "recover_t", "tate_normal_form", "translate_to_origin", "ReductionReport",
    "additive_primes", "additive_primes_general", "fixed_additive_set", "is_semistable",
    "minimal_invariants_odd",
]
