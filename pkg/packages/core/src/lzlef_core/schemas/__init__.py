"""Result schemas shared across lozenge-lefschetz packages."""

from .aci import AciParams
from .bundles import (
    AciSemistabilityTrace,
    BundleReport,
    EquivalenceReport,
    SplittingReport,
    SplittingType,
    StabilityReport,
    TwoOfThreeReport,
)
from .common import MonomialField, RationalField
from .enums import (
    LevelPrediction,
    PunctureRelation,
    RenderFormat,
    ScanFamily,
    SplittingCase,
    WlpRule,
)
from .lefschetz import AxesCentralForm, WlpVerdict
from .scan import ScanRecord, VerificationRow

__all__ = [
    "AciParams",
    "AciSemistabilityTrace",
    "AxesCentralForm",
    "BundleReport",
    "EquivalenceReport",
    "LevelPrediction",
    "MonomialField",
    "PunctureRelation",
    "RationalField",
    "RenderFormat",
    "ScanFamily",
    "ScanRecord",
    "SplittingCase",
    "SplittingReport",
    "SplittingType",
    "StabilityReport",
    "TwoOfThreeReport",
    "VerificationRow",
    "WlpRule",
    "WlpVerdict",
]
