"""Generic splitting types of syzygy bundles of almost complete intersections."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil, floor

from lzlef_core.errors import PreconditionError
from lzlef_core.monomials import aci_ideal
from lzlef_core.schemas import (
    AciParams,  # noqa: TC001
    EquivalenceReport,
    SplittingCase,
    SplittingReport,
    SplittingType,
)
from lzlef_lozenge.linalg import check_characteristic, determinant
from lzlef_lozenge.regions import build_region
from lzlef_lozenge.tilings import biadjacency

from .restriction import (
    mixed_generator_survives,
    regularity_2var,
    splitting_type_oracle,
)
from .stability import aci_semistable
from .wlp import aci_wlp, wlp_rank_scan

logger = logging.getLogger(__name__)


def _nonsemistable_type(p: AciParams) -> tuple[tuple[int, int, int], SplittingCase]:
    (a, alpha), (b, beta), (c, gamma) = sorted(p.pairs(), key=lambda pair: pair[0])
    inner = alpha + beta + gamma
    if min(inner, c) >= a + b - 1:
        return (-c, -inner, -a - b), SplittingCase.NSS_I

    half_pure = Fraction(a + b + c, 2)
    half_mixed = Fraction(a + b + inner, 2)
    # lcm degrees of the inner generator with each pure power
    lcm_min = min(a + beta + gamma, b + alpha + gamma, alpha + beta + c)
    if half_pure <= min(lcm_min, half_mixed):
        return (-inner, -ceil(half_pure), -floor(half_pure)), SplittingCase.NSS_II
    if half_mixed <= min(lcm_min, half_pure):
        q = -min(a + beta + gamma, b + alpha + gamma, ceil(half_mixed))
        return (-c, q, -a - b - inner - q), SplittingCase.NSS_III
    if mixed_generator_survives(a, b, alpha, beta, gamma):
        top = regularity_2var(a, b, alpha, beta, gamma)
        if c >= top:
            # (x+y)^c already lies in the restriction of the other three
            q = -top - 1
            return (-c, q, -a - b - inner - q), SplittingCase.NSS_IV
    s = -lcm_min
    rest = Fraction(-p.total - s, 2)
    return (floor(rest), ceil(rest), s), SplittingCase.NSS_IV


def splitting_type_formula(p: AciParams) -> SplittingReport:
    """Closed-form generic splitting type in characteristic 0.

    Nonsemistable bundles go through cases (i)-(iv) in order after sorting the
    variables by pure exponent; semistable ones branch on the total degree
    mod 3, asking the WLP decision in the divisible case.
    """
    semistable = aci_semistable(p).semistable
    if not semistable:
        entries, case = _nonsemistable_type(p)
    else:
        k, remainder = divmod(p.total, 3)
        if remainder == 1:
            entries, case = (-k - 1, -k, -k), SplittingCase.SS_3K_PLUS_1
        elif remainder == 2:
            entries, case = (-k - 1, -k - 1, -k), SplittingCase.SS_3K_PLUS_2
        elif aci_wlp(p).has_wlp:
            entries, case = (-k, -k, -k), SplittingCase.SS_3K_WLP
        else:
            entries, case = (-k - 1, -k, -k + 1), SplittingCase.SS_3K_NO_WLP
    logger.info("Splitting type of %s: %s by %s", p.label, entries, case)
    return SplittingReport(
        splitting_type=SplittingType.from_entries(entries),
        case=case,
        semistable=semistable,
    )


def equivalence_check(p: AciParams, characteristic: int = 0) -> EquivalenceReport:
    """WLP, non-vanishing of det Z(T_d(I)) and splitting type (-d, -d, -d).

    All three are computed independently over the prime field (Q for 0); they
    coincide whenever the semistability conditions hold and d is an integer.
    """
    check_characteristic(characteristic)
    d = p.integer_degree
    if d is None or not aci_semistable(p).semistable:
        msg = f"{p.label} needs an integer d and a semistable syzygy bundle"
        raise PreconditionError(msg)
    ideal = aci_ideal(p)
    det = determinant(biadjacency(build_region(ideal, d)))
    splitting = splitting_type_oracle(p, characteristic)
    report = EquivalenceReport(
        characteristic=characteristic,
        degree=d,
        wlp=wlp_rank_scan(ideal, characteristic).has_wlp,
        det_nonzero=det % characteristic != 0 if characteristic else det != 0,
        splitting_type=splitting,
        balanced_splitting=splitting.as_tuple() == (-d, -d, -d),
    )
    if not report.agree:
        logger.warning(
            "Equivalence fails for %s in char %d: %s", p.label, characteristic, report
        )
    return report
