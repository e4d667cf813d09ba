"""Classification of binary and ternary LCD codes.

A linear code is LCD (linear complementary dual) when it meets its dual
only in the zero vector.  The package enumerates candidate generator
matrices, removes equivalent copies with a canonical form, and certifies
each classification with an exact mass formula.
"""

from .canon import AutInfo, CanonicalKey, are_equivalent, automorphism_order, canonical_key, canonize
from .classify import (
    ClassificationError,
    ClassificationResult,
    ClassRecord,
    TableRow,
    classify,
    enumerate_colwise,
    enumerate_rowwise,
    lift_from_shorter,
    refine_by_distance,
    smallest_aut,
)
from .code import LinearCode, ResourceError, WeightEnumerator, from_standard_form
from .field import FieldError, FqVector, dot, fq_arith, weight
from .mass import class_mass, closed_form_count, gaussian_binomial, group_size, lower_bound_t, mass
from .matrix import FqMatrix, gram, rank, rref

__version__ = "0.1.0"

__all__ = [
    "AutInfo",
    "CanonicalKey",
    "ClassRecord",
    "ClassificationError",
    "ClassificationResult",
    "FieldError",
    "FqMatrix",
    "FqVector",
    "LinearCode",
    "ResourceError",
    "TableRow",
    "WeightEnumerator",
    "are_equivalent",
    "automorphism_order",
    "canonical_key",
    "canonize",
    "class_mass",
    "classify",
    "closed_form_count",
    "dot",
    "enumerate_colwise",
    "enumerate_rowwise",
    "fq_arith",
    "from_standard_form",
    "gaussian_binomial",
    "gram",
    "group_size",
    "lift_from_shorter",
    "lower_bound_t",
    "mass",
    "rank",
    "refine_by_distance",
    "rref",
    "smallest_aut",
    "weight",
]
