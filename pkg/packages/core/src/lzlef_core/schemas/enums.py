"""Pydantic-compatible enums for result schemas."""

from enum import StrEnum


class WlpRule(StrEnum):
    """Which argument decided a weak Lefschetz verdict."""

    NOT_SEMISTABLE_OR_FRACTIONAL = "(a)"
    TOUCHING_INNER = "(I)"
    EVEN_INNER = "(II)"
    HEXAGON = "(III)"
    AXES_CENTRAL = "(IV)"
    AXES_CENTRAL_ODD = "(IV')"
    MIRROR = "(V)"
    MIRROR_ODD = "(V')"
    DETERMINANT = "determinant"
    RANK_SCAN = "rank-scan"


class SplittingCase(StrEnum):
    """Branch of the closed splitting-type formula that produced a triple."""

    NSS_I = "nonsemistable-i"
    NSS_II = "nonsemistable-ii"
    NSS_III = "nonsemistable-iii"
    NSS_IV = "nonsemistable-iv"
    SS_3K_PLUS_1 = "semistable-3k+1"
    SS_3K_PLUS_2 = "semistable-3k+2"
    SS_3K_WLP = "semistable-3k-wlp"
    SS_3K_NO_WLP = "semistable-3k-no-wlp"


class PunctureRelation(StrEnum):
    """How two punctures of the same triangular region meet."""

    DISJOINT = "disjoint"
    TOUCHING = "touching"
    OVERLAPPING = "overlapping"


class LevelPrediction(StrEnum):
    """Known status of a level almost complete intersection."""

    HAS_WLP = "has-wlp"
    FAILS_WLP = "fails-wlp"
    OPEN_DISTINCT = "open-distinct"
    OPEN_ODD_T = "open-odd-t"
    EXCEPTIONAL = "exceptional"
    OUTSIDE = "outside"


class ScanFamily(StrEnum):
    """Parameter families walked by the scan command."""

    BOX = "box"
    LEVEL = "level"
    SYMMETRIC = "symmetric"


class RenderFormat(StrEnum):
    ASCII = "ascii"
    SVG = "svg"
