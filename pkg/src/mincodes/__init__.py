"""Minimal binary linear codes from sets and functions with high algebraic immunity."""

from .boolfun import (NEG_INF, POS_INF, AnnihilatorBasis, BooleanFunction, SupportSet,
                      VectorialFunction, ai_of_function, ai_of_interval, ai_of_set,
                      ai_of_vectorial, algebraic_degree, annihilator_space, hamming_distance,
                      interval_support, pairwise_preimage_ai_bound_check, partition_vectorial)
from .codes import (LinearCode, MinimalityReport, Verdict, WeightDistribution,
                    annihilator_minimality_criterion, code_from_functions, is_minimal_ab,
                    is_minimal_exact, min_distance, puncture, shorten, weight_distribution)
from .gf2m import FieldSpec, build_field, point_enumeration, primitive_conjugacy_classes, trace
from .poly2 import BinaryPolynomial

__version__ = "0.1.0"

__all__ = [
    "NEG_INF",
    "POS_INF",
    "AnnihilatorBasis",
    "BooleanFunction",
    "SupportSet",
    "VectorialFunction",
    "ai_of_function",
    "ai_of_interval",
    "ai_of_set",
    "ai_of_vectorial",
    "algebraic_degree",
    "annihilator_space",
    "hamming_distance",
    "interval_support",
    "pairwise_preimage_ai_bound_check",
    "partition_vectorial",
    "LinearCode",
    "MinimalityReport",
    "Verdict",
    "WeightDistribution",
    "annihilator_minimality_criterion",
    "code_from_functions",
    "is_minimal_ab",
    "is_minimal_exact",
    "min_distance",
    "puncture",
    "shorten",
    "weight_distribution",
    "FieldSpec",
    "build_field",
    "point_enumeration",
    "primitive_conjugacy_classes",
    "trace",
    "BinaryPolynomial",
]
