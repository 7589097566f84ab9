"""Weak Lefschetz decisions, syzygy-bundle stability and splitting types."""

from .restriction import (
    extraneous_generator_degrees,
    hilbert_oracle,
    minimal_generator_degrees,
    mixed_generator_survives,
    regularity_2var,
    regularity_oracle,
    restricted_ideal_generators,
    splitting_type_oracle,
)
from .splitting import equivalence_check, splitting_type_formula
from .stability import (
    aci_semistable,
    aci_stability,
    semistability,
    stability_region,
    two_of_three,
)
from .wlp import (
    aci_wlp,
    axes_central_form,
    char_bound,
    gravity_central,
    level_family_prediction,
    peak_degrees,
    symmetric_prediction,
    wlp_peak,
    wlp_rank_scan,
)

__all__ = [
    "aci_semistable",
    "aci_stability",
    "aci_wlp",
    "axes_central_form",
    "char_bound",
    "equivalence_check",
    "extraneous_generator_degrees",
    "gravity_central",
    "hilbert_oracle",
    "level_family_prediction",
    "minimal_generator_degrees",
    "mixed_generator_survives",
    "peak_degrees",
    "regularity_2var",
    "regularity_oracle",
    "restricted_ideal_generators",
    "semistability",
    "splitting_type_formula",
    "stability_region",
    "symmetric_prediction",
    "two_of_three",
    "wlp_peak",
    "wlp_rank_scan",
]
