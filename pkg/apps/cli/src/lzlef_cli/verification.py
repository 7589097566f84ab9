"""Worked examples recomputed from scratch, one row per claim."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from lzlef_core.errors import LzlefError
from lzlef_core.monomials import aci_ideal, parse_ideal
from lzlef_core.schemas import AciParams, VerificationRow
from lzlef_lefschetz.restriction import minimal_generator_degrees, splitting_type_oracle
from lzlef_lefschetz.splitting import equivalence_check, splitting_type_formula
from lzlef_lefschetz.stability import aci_stability, semistability, two_of_three
from lzlef_lefschetz.wlp import aci_wlp, wlp_peak, wlp_rank_scan
from lzlef_lozenge.linalg import determinant, permanent
from lzlef_lozenge.regions import build_region, classify_punctures
from lzlef_lozenge.tilings import biadjacency, count_tilings

if TYPE_CHECKING:
    from collections.abc import Callable

logger = logging.getLogger(__name__)

NEVER_WLP = "x^5,y^5,z^5,xy^2z,xyz^2"
THIRTEEN_TILINGS_IDEAL = "x^7,y^7,z^6,xy^4z^2,x^3yz^2,x^4yz"
SMALL_PRIMES = (2, 3, 5, 7, 11)


class Check(NamedTuple):
    name: str
    locus: str
    expected: str
    compute: Callable[[], str]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _aci(*values: int) -> AciParams:
    return AciParams.of(*values)


def _peak_det(p: AciParams, d: int) -> int:
    return determinant(biadjacency(build_region(aci_ideal(p), d)))


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


def _fractional_degree_det() -> str:
    return str(_peak_det(_aci(5, 5, 3, 1, 1, 2), 6))


def _fractional_degree_failing_primes() -> str:
    ideal = aci_ideal(_aci(5, 5, 3, 1, 1, 2))
    failing = [q for q in SMALL_PRIMES if not wlp_rank_scan(ideal, q).has_wlp]
    return str(failing)


def _never_wlp() -> str:
    ideal = parse_ideal(NEVER_WLP)
    verdicts = [wlp_rank_scan(ideal, q).has_wlp for q in (0, *SMALL_PRIMES)]
    return _flag(any(verdicts))


def _never_wlp_det() -> str:
    return str(determinant(biadjacency(build_region(parse_ideal(NEVER_WLP), 6))))


def _level_det() -> str:
    return str(abs(_peak_det(_aci(6, 7, 8, 3, 3, 3), 10)))


def _level_obstruction_primes() -> str:
    verdict = wlp_peak(aci_ideal(_aci(6, 7, 8, 3, 3, 3)), 10)
    return str(verdict.obstruction_primes)


def _verdict(*values: int) -> Callable[[], str]:
    def compute() -> str:
        verdict = aci_wlp(_aci(*values))
        return f"{_flag(verdict.has_wlp)} {verdict.rule}"

    return compute


def _splitting(*values: int) -> Callable[[], str]:
    def compute() -> str:
        p = _aci(*values)
        formula = splitting_type_formula(p).splitting_type
        oracle = splitting_type_oracle(p)
        if formula != oracle:
            return f"formula {formula.as_tuple()} != restriction {oracle.as_tuple()}"
        return str(formula.as_tuple())

    return compute


def _non_semistable_four_generators() -> str:
    p = _aci(4, 5, 5, 3, 1, 1)
    return (
        f"semistable={_flag(aci_stability(p).semistable)} "
        f"degrees={minimal_generator_degrees(p)}"
    )


def _char_seven_equivalence() -> str:
    report = equivalence_check(_aci(6, 7, 8, 3, 3, 3), 7)
    return (
        f"wlp={_flag(report.wlp)} det={_flag(report.det_nonzero)} "
        f"balanced={_flag(report.balanced_splitting)}"
    )


def _thirteen_tilings() -> str:
    region = build_region(parse_ideal(THIRTEEN_TILINGS_IDEAL), 8)
    return f"{permanent(biadjacency(region))} {count_tilings(region)}"


def _thirteen_tilings_punctures() -> str:
    classes = classify_punctures(build_region(parse_ideal(THIRTEEN_TILINGS_IDEAL), 8))
    return f"{len(classes.floating)} floating, {len(classes.non_floating)} grounded"


def _small_region() -> str:
    region = build_region(parse_ideal("xy,y^2,z^3"), 4)
    return f"{len(region.up_triangles)} up, {len(region.down_triangles)} down"


def _ladder(text: str, d: int) -> Callable[[], str]:
    def compute() -> str:
        report = semistability(parse_ideal(text), d)
        witness = ",".join(str(g) for g in report.witness or [])
        return (
            f"semistable={_flag(report.semistable)} stable={_flag(report.stable)} "
            f"witness=[{witness}]"
        )

    return compute


def _two_of_three_all_hold() -> str:
    report = two_of_three(parse_ideal("x^5,y^5,z^5,xyz"), 6)
    return _flag(report.perfectly_punctured and report.tileable and report.semistable)


CHECKS: tuple[Check, ...] = (
    Check("det Z(T_d)", "I_{5,5,3,1,1,2}, d=6", "5", _fractional_degree_det),
    Check(
        "WLP fails exactly in",
        "I_{5,5,3,1,1,2}, chars 2..11",
        "[5]",
        _fractional_degree_failing_primes,
    ),
    Check("WLP in any characteristic", NEVER_WLP, "false", _never_wlp),
    Check("det Z(T_d)", f"{NEVER_WLP}, d=6", "0", _never_wlp_det),
    Check("|det Z(T_d)|", "I_{6,7,8,3,3,3}, d=10", "1764", _level_det),
    Check(
        "obstruction primes",
        "I_{6,7,8,3,3,3}, d=10",
        "[2, 3, 7]",
        _level_obstruction_primes,
    ),
    Check("WLP verdict", "I_{6,7,8,3,3,3}", "true (IV)", _verdict(6, 7, 8, 3, 3, 3)),
    Check("WLP verdict", "I_{7,7,7,3,3,3}", "false (IV')", _verdict(7, 7, 7, 3, 3, 3)),
    Check("WLP verdict", "I_{3,5,5,1,2,2}", "false (IV')", _verdict(3, 5, 5, 1, 2, 2)),
    Check(
        "splitting type",
        "I_{6,7,8,3,3,3}",
        "(-10, -10, -10)",
        _splitting(6, 7, 8, 3, 3, 3),
    ),
    Check(
        "splitting type",
        "I_{7,7,7,3,3,3}",
        "(-11, -10, -9)",
        _splitting(7, 7, 7, 3, 3, 3),
    ),
    Check(
        "splitting type",
        "I_{4,5,5,3,1,1}",
        "(-7, -6, -6)",
        _splitting(4, 5, 5, 3, 1, 1),
    ),
    Check(
        "restricted generators",
        "I_{4,5,5,3,1,1}",
        "semistable=false degrees=(4, 5, 5, 5)",
        _non_semistable_four_generators,
    ),
    Check(
        "WLP / det / balanced type",
        "I_{6,7,8,3,3,3}, char 7",
        "wlp=false det=false balanced=false",
        _char_seven_equivalence,
    ),
    Check("region size", "T_4(xy,y^2,z^3)", "4 up, 4 down", _small_region),
    Check(
        "permanent and tiling count",
        f"T_8({THIRTEEN_TILINGS_IDEAL})",
        "13 13",
        _thirteen_tilings,
    ),
    Check(
        "puncture classes",
        f"T_8({THIRTEEN_TILINGS_IDEAL})",
        "3 floating, 3 grounded",
        _thirteen_tilings_punctures,
    ),
    Check(
        "stability",
        "(x^2,y^2,z^2,xy,xz,yz), d=3",
        "semistable=true stable=true witness=[]",
        _ladder("x^2,y^2,z^2,xy,xz,yz", 3),
    ),
    Check(
        "stability",
        "(x^2,y^2,z^2,xy,xz), d=3",
        "semistable=true stable=false witness=[x^2,xy,xz]",
        _ladder("x^2,y^2,z^2,xy,xz", 3),
    ),
    Check(
        "stability",
        "(x^3,y^3,z^3,xyz,x^2y,x^2z), d=4",
        "semistable=false stable=false witness=[x^3,x^2y,x^2z]",
        _ladder("x^3,y^3,z^3,xyz,x^2y,x^2z", 4),
    ),
    Check(
        "perfectly punctured, tileable, semistable",
        "T_6(x^5,y^5,z^5,xyz)",
        "true",
        _two_of_three_all_hold,
    ),
)


def verification_rows() -> list[VerificationRow]:
    rows = []
    for check in CHECKS:
        try:
            computed = check.compute()
        except LzlefError as exc:
            computed = f"error: {exc}"
        row = VerificationRow(
            name=check.name,
            locus=check.locus,
            expected=check.expected,
            computed=computed,
        )
        if not row.passed:
            logger.warning(
                "%s at %s: expected %s, computed %s",
                row.name,
                row.locus,
                row.expected,
                row.computed,
            )
        rows.append(row)
    return rows
