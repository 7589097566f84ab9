"""Semistability and stability of syzygy bundles of monomial ideals."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import TYPE_CHECKING

from lzlef_core.errors import ConsistencyError, PreconditionError
from lzlef_core.monomials import MonomialIdeal, aci_ideal, monomials_of_degree
from lzlef_core.schemas import (
    AciParams,  # noqa: TC001
    AciSemistabilityTrace,
    StabilityReport,
    TwoOfThreeReport,
)
from lzlef_lozenge.regions import (
    build_region,
    is_perfectly_punctured,
    monomial_subregion,
    over_puncturing,
    over_puncturing_region,
    region_ideal,
)
from lzlef_lozenge.tilings import is_tileable_matching

if TYPE_CHECKING:
    from lzlef_core.monomials import Monomial

logger = logging.getLogger(__name__)


def _check_bundle_input(ideal: MonomialIdeal, d: int) -> None:
    if not ideal.is_artinian:
        msg = f"Syzygy bundles are only considered for Artinian ideals, got {ideal}"
        raise PreconditionError(msg)
    if len(ideal) < 3:
        msg = f"Need at least three minimal generators, got {len(ideal)}"
        raise PreconditionError(msg)
    if ideal.max_degree > d:
        msg = f"Generators of {ideal} exceed degree d={d}"
        raise PreconditionError(msg)


def semistability(ideal: MonomialIdeal, d: int | None = None) -> StabilityReport:
    """Brenner's criterion over every proper subset J with |J| >= 2.

    The degree form (d_J - sum_J deg g_j) / (|J| - 1) <= -sum deg g_i / (m - 1)
    decides; the over-puncturing form is evaluated alongside and must agree.
    Subsets are visited by size, then lexicographically on generator indices.
    The witness is the first violating subset, else the first tight one.
    """
    d = ideal.max_degree if d is None else d
    _check_bundle_input(ideal, d)
    gens = ideal.generators
    m = len(gens)
    slope = Fraction(-sum(g.degree for g in gens), m - 1)
    whole = Fraction(over_puncturing(ideal, d), m - 1)

    violating: tuple[Monomial, ...] | None = None
    tight: tuple[Monomial, ...] | None = None
    for size in range(2, m):
        for subset in combinations(gens, size):
            g_j = reduce(lambda u, v: u.gcd(v), subset)
            lhs = Fraction(g_j.degree - sum(g.degree for g in subset), size - 1)
            quotient = MonomialIdeal.of(*(g / g_j for g in subset))
            lhs_o = Fraction(over_puncturing(quotient, d - g_j.degree), size - 1)
            if (lhs <= slope) != (lhs_o <= whole) or (lhs == slope) != (
                lhs_o == whole
            ):
                msg = f"Degree and over-puncturing forms disagree on {subset}"
                raise ConsistencyError(msg)
            if lhs > slope and violating is None:
                violating = subset
            elif lhs == slope and tight is None:
                tight = subset
        if violating is not None:
            break

    witness = violating if violating is not None else tight
    report = StabilityReport(
        semistable=violating is None,
        stable=violating is None and tight is None,
        witness=list(witness) if witness is not None else None,
        witness_gcd=reduce(lambda u, v: u.gcd(v), witness) if witness else None,
        slope_bound=slope,
    )
    logger.debug("Stability of %s at d=%d: %s", ideal, d, report)
    return report


def aci_semistable(p: AciParams) -> AciSemistabilityTrace:
    """The three parameter conditions, checked against the rational d."""
    d = p.degree
    return AciSemistabilityTrace(
        degree=d,
        max_condition=max(p.a, p.b, p.c, p.inner_degree) <= d,
        lcm_condition=min(
            p.alpha + p.beta + p.c, p.alpha + p.b + p.gamma, p.a + p.beta + p.gamma
        )
        >= d,
        pair_condition=min(p.a + p.b, p.a + p.c, p.b + p.c) >= d,
    )


def aci_stability(p: AciParams) -> StabilityReport:
    """Subset criterion for I_{a,b,c,alpha,beta,gamma} at its top generator degree."""
    return semistability(aci_ideal(p))


# ---------------------------------------------------------------------------
# Region criteria
# ---------------------------------------------------------------------------


def _contains_ideal(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    return all(g in big for g in small)


def two_of_three(ideal: MonomialIdeal, d: int) -> TwoOfThreeReport:
    """Perfectly punctured, tileable, semistable: any two force the third."""
    _check_bundle_input(ideal, d)
    region = build_region(ideal, d)
    if region.is_empty:
        msg = f"T_{d}{ideal} is empty"
        raise PreconditionError(msg)
    report = TwoOfThreeReport(
        perfectly_punctured=over_puncturing(ideal, d) == 0,
        tileable=is_tileable_matching(region),
        semistable=semistability(ideal, d).semistable,
        ideal_equals_region_ideal_sum=_contains_ideal(ideal, region_ideal(region)),
    )
    if not report.consistent:
        msg = f"Two-of-three violated for T_{d}{ideal}: {report}"
        raise ConsistencyError(msg)
    if report.tileable and not report.ideal_equals_region_ideal_sum and (
        report.semistable
    ):
        msg = f"{ideal} differs from I + J(T) on a tileable region yet is semistable"
        raise ConsistencyError(msg)
    logger.info("Two-of-three for T_%d%s: %s", d, ideal, report)
    return report


def stability_region(ideal: MonomialIdeal, d: int) -> bool:
    """Stable iff every proper monomial subregion is under-punctured.

    Subregions are those cut off by monomials m != 1 of degree < d outside I;
    a monomial inside I only sees part of a single puncture. Vertex punctures
    (generators of degree d) are refused.
    """
    _check_bundle_input(ideal, d)
    if ideal.max_degree >= d:
        msg = f"{ideal} has a generator of degree d={d}"
        raise PreconditionError(msg)
    region = build_region(ideal, d)
    if region.is_empty or not is_tileable_matching(region):
        msg = f"T_{d}{ideal} must be non-empty and tileable"
        raise PreconditionError(msg)
    if not is_perfectly_punctured(region):
        msg = f"T_{d}{ideal} is not perfectly punctured"
        raise PreconditionError(msg)
    if not _contains_ideal(ideal, region_ideal(region)):
        msg = f"{ideal} must equal I + J(T_{d}(I))"
        raise PreconditionError(msg)
    for k in range(1, d):
        for m in monomials_of_degree(k):
            if m in ideal:
                continue
            if over_puncturing_region(monomial_subregion(region, m)) >= 0:
                logger.debug(
                    "Subregion at %s of T_%d%s is not under-punctured", m, d, ideal
                )
                return False
    return True
