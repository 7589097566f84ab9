"""Triangular regions, exact matrix kernels and lozenge tilings."""

from .linalg import IntegerMatrix, determinant, has_maximal_rank, permanent, rank
from .regions import (
    Puncture,
    PunctureClassification,
    TriangularRegion,
    balance,
    build_region,
    classify_punctures,
    is_balanced,
    is_perfectly_punctured,
    monomial_subregion,
    over_puncturing,
    over_puncturing_region,
    puncture_relation,
    region_ideal,
)
from .tilings import (
    Tiling,
    biadjacency,
    count_tilings,
    enumerate_tilings,
    is_tileable_matching,
    is_tileable_structural,
)

__all__ = [
    "IntegerMatrix",
    "Puncture",
    "PunctureClassification",
    "Tiling",
    "TriangularRegion",
    "balance",
    "biadjacency",
    "build_region",
    "classify_punctures",
    "count_tilings",
    "determinant",
    "enumerate_tilings",
    "has_maximal_rank",
    "is_balanced",
    "is_perfectly_punctured",
    "is_tileable_matching",
    "is_tileable_structural",
    "monomial_subregion",
    "over_puncturing",
    "over_puncturing_region",
    "permanent",
    "puncture_relation",
    "rank",
    "region_ideal",
]
