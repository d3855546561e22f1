"""Exact step-linear separation and open-component structure of convex cones."""

from .cones import (GE, GT, LexHalfspace, MixedCone, StepSystemCone,
                    conv_union_ray, find_point, halfspace_components, intersect,
                    is_asymmetric, is_empty, linear_hull, lineality_space, member)
from .errors import (CandidateBlowup, ConeError, ConstructionStuck,
                     DependentFunctional, DimensionMismatch, EmptyCone, IsMember,
                     NotAsymmetric, NotDisjoint, NotMember, ZeroFunctional)
from .exact_arith import Q, Subspace
from .separation import (SeparationCertificate, included_in_halfspace,
                         linear_representation, nonmember_certificate,
                         regular_extension, separate, verify_certificate)
from .step_linear import (Cortege, LinearFunctional, StepLinearFunction,
                          eval_step, eval_step_perturbed)
from .structure import (SemilatticeGraph, Signature, dominates,
                        enumerate_components, equivalent, icr_member,
                        join_witness, minimal_face, signature)

__all__ = [
    "CandidateBlowup",
    "ConeError",
    "ConstructionStuck",
    "conv_union_ray",
    "Cortege",
    "DependentFunctional",
    "DimensionMismatch",
    "dominates",
    "EmptyCone",
    "enumerate_components",
    "equivalent",
    "eval_step",
    "eval_step_perturbed",
    "find_point",
    "GE",
    "GT",
    "halfspace_components",
    "icr_member",
    "included_in_halfspace",
    "intersect",
    "is_asymmetric",
    "is_empty",
    "IsMember",
    "join_witness",
    "LexHalfspace",
    "lineality_space",
    "linear_hull",
    "linear_representation",
    "LinearFunctional",
    "member",
    "minimal_face",
    "MixedCone",
    "nonmember_certificate",
    "NotAsymmetric",
    "NotDisjoint",
    "NotMember",
    "Q",
    "regular_extension",
    "SemilatticeGraph",
    "separate",
    "SeparationCertificate",
    "signature",
    "Signature",
    "StepLinearFunction",
    "StepSystemCone",
    "Subspace",
    "verify_certificate",
    "ZeroFunctional",
]

__version__ = "0.1.0"
