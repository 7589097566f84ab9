"""Weak Lefschetz property of monomial algebras R/I, R = K[x, y, z].

General ideals are decided by ranks of Z(T_d(I)) in every degree. Almost
complete intersections go through the parameter decision tree first and only
fall back to the peak determinant when no case applies.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import permutations
from math import ceil

from sympy import factorint

from lzlef_core.errors import PreconditionError
from lzlef_core.monomials import (
    MonomialIdeal,  # noqa: TC001
    aci_ideal,
    hilbert_function,
    socle_degrees,
)
from lzlef_core.schemas import (
    AciParams,  # noqa: TC001
    AxesCentralForm,
    LevelPrediction,
    WlpRule,
    WlpVerdict,
)
from lzlef_lozenge.linalg import check_characteristic, determinant, has_maximal_rank
from lzlef_lozenge.regions import build_region, is_balanced
from lzlef_lozenge.tilings import biadjacency

from .stability import aci_semistable

logger = logging.getLogger(__name__)

# (alpha, beta, gamma, t) excluded from the level-family statement
LEVEL_EXCEPTIONS = frozenset({(2, 9, 13, 9), (3, 7, 14, 9)})


def _top_degree_window(ideal: MonomialIdeal) -> range:
    """Degrees d whose map [R/I]_{d-2} -> [R/I]_{d-1} can fail maximal rank."""
    if not ideal.is_artinian:
        msg = f"WLP is only decided for Artinian ideals, got {ideal}"
        raise PreconditionError(msg)
    top = max(socle_degrees(ideal), default=-2)
    return range(2, top + 3)


def wlp_rank_scan(ideal: MonomialIdeal, characteristic: int = 0) -> WlpVerdict:
    """Check maximal rank of Z(T_d(I)) for every d up to the top socle degree + 2."""
    check_characteristic(characteristic)
    critical = [
        d
        for d in _top_degree_window(ideal)
        if not has_maximal_rank(biadjacency(build_region(ideal, d)), characteristic)
    ]
    logger.debug("Rank scan of %s in char %d: %s", ideal, characteristic, critical)
    return WlpVerdict(
        has_wlp=not critical,
        characteristic=characteristic,
        rule=WlpRule.RANK_SCAN,
        critical_degrees=critical,
    )


def peak_degrees(ideal: MonomialIdeal) -> list[int]:
    """Degrees d with T_d(I) balanced, i.e. h(d-2) = h(d-1) ("twin peaks")."""
    return [
        d
        for d in _top_degree_window(ideal)
        if hilbert_function(ideal, d - 2) == hilbert_function(ideal, d - 1)
    ]


def wlp_peak(ideal: MonomialIdeal, d: int, characteristic: int = 0) -> WlpVerdict:
    """Decide WLP from det Z(T_d(I)) alone.

    Needs T_d(I) balanced and no socle below degree d - 2; otherwise the
    determinant says nothing and wlp_rank_scan must be used.
    """
    check_characteristic(characteristic)
    region = build_region(ideal, d)
    if not is_balanced(region):
        msg = f"T_{d}{ideal} is not balanced; use wlp_rank_scan"
        raise PreconditionError(msg)
    low = [s for s in socle_degrees(ideal) if s < d - 2]
    if low:
        msg = f"{ideal} has socle in degrees {low} below {d - 2}; use wlp_rank_scan"
        raise PreconditionError(msg)
    det = determinant(biadjacency(region))
    nonzero = det % characteristic != 0 if characteristic else det != 0
    return WlpVerdict(
        has_wlp=nonzero,
        characteristic=characteristic,
        rule=WlpRule.DETERMINANT,
        critical_degrees=[] if nonzero else [d],
        det_value=det,
        obstruction_primes=(
            sorted(int(q) for q in factorint(abs(det))) if det else None
        ),
    )


# ---------------------------------------------------------------------------
# Almost complete intersections
# ---------------------------------------------------------------------------


def axes_central_form(p: AciParams) -> AxesCentralForm | None:
    """Match T_d(I) against the two axes-central shapes, up to relabelling.

    Only meaningful when the semistability conditions hold and d is an
    integer; returns None otherwise or when neither shape matches.
    """
    d = p.integer_degree
    if d is None or not aci_semistable(p).semistable:
        return None
    inner_side = d - p.inner_degree
    for order in permutations(range(3)):
        q = p.permuted(order)
        big_a, big_b, big_c = d - q.a, d - q.b, d - q.c
        doubled = (2 * q.alpha, 2 * q.beta, 2 * q.gamma)
        if big_a % 2 == big_b % 2 == big_c % 2 and doubled == (
            big_b + big_c,
            big_a + big_c,
            big_a + big_b,
        ):
            case = 1
        elif big_a % 2 == big_b % 2 != big_c % 2 and doubled == (
            big_b + big_c + 1,
            big_a + big_c - 1,
            big_a + big_b,
        ):
            case = 2
        else:
            continue
        return AxesCentralForm(
            case=case,
            d_minus_a=big_a,
            d_minus_b=big_b,
            d_minus_c=big_c,
            inner_side=inner_side,
            all_odd=all(v % 2 for v in (big_a, big_b, big_c, inner_side)),
            order=order,
        )
    return None


def gravity_central(p: AciParams) -> bool:
    """The inner puncture's vertices are equidistant from the opposite punctures."""
    d = p.degree
    return (
        (d - p.b) + (d - p.c) - p.alpha
        == (d - p.a) + (d - p.c) - p.beta
        == (d - p.a) + (d - p.b) - p.gamma
    )


def _mirror_parity(p: AciParams) -> bool | None:
    """Parity test for a mirror-symmetric region; None without a mirror axis."""
    for q in p.permutations():
        if q.a == q.b and q.alpha == q.beta:
            return not (q.c % 2 and q.gamma % 2)
    return None


def _decision_tree(p: AciParams, d: int) -> tuple[bool, WlpRule] | None:
    lcm_degrees = (
        p.alpha + p.beta + p.c,
        p.alpha + p.b + p.gamma,
        p.a + p.beta + p.gamma,
    )
    if min(lcm_degrees) == d:
        return True, WlpRule.TOUCHING_INNER
    if (d - p.inner_degree) % 2 == 0:
        return True, WlpRule.EVEN_INNER
    if d in (p.a, p.b, p.c):
        return True, WlpRule.HEXAGON
    form = axes_central_form(p)
    if form is not None:
        if form.all_odd:
            return False, WlpRule.AXES_CENTRAL_ODD
        return True, WlpRule.AXES_CENTRAL
    mirror = _mirror_parity(p)
    if mirror is not None:
        return mirror, WlpRule.MIRROR if mirror else WlpRule.MIRROR_ODD
    return None


def aci_wlp(p: AciParams, characteristic: int = 0) -> WlpVerdict:
    """WLP of R/I_{a,b,c,alpha,beta,gamma}.

    In characteristic 0 the first applicable case among (a), (I)-(V') decides;
    the peak determinant is the fallback. Positive characteristic always goes
    through the rank scan.
    """
    check_characteristic(characteristic)
    if characteristic:
        return wlp_rank_scan(aci_ideal(p), characteristic)
    d = p.integer_degree
    if d is None or not aci_semistable(p).semistable:
        logger.info("%s has WLP by (a)", p.label)
        return WlpVerdict(
            has_wlp=True,
            characteristic=0,
            rule=WlpRule.NOT_SEMISTABLE_OR_FRACTIONAL,
        )
    decided = _decision_tree(p, d)
    if decided is None:
        logger.warning("No case decides %s; computing det Z(T_%d)", p.label, d)
        return wlp_peak(aci_ideal(p), d, 0)
    has_wlp, rule = decided
    logger.info("%s: WLP %s by %s", p.label, has_wlp, rule)
    return WlpVerdict(
        has_wlp=has_wlp,
        characteristic=0,
        rule=rule,
        critical_degrees=[] if has_wlp else [d],
    )


def char_bound(a: int, b: int, c: int) -> int:
    """3^(C(x, 2) / 2) with x = (a+b+c)/2 + 2, exponent rounded up.

    WLP in characteristic 0 transfers to every characteristic above this.
    """
    if min(a, b, c) < 1:
        msg = f"Pure powers must be positive, got {(a, b, c)}"
        raise PreconditionError(msg)
    x = Fraction(a + b + c, 2) + 2
    return 3 ** ceil(x * (x - 1) / 4)


# ---------------------------------------------------------------------------
# Closed forms for families
# ---------------------------------------------------------------------------


def symmetric_prediction(a: int, alpha: int) -> bool:
    """WLP of I_{a,a,a,alpha,alpha,alpha} in characteristic 0."""
    if not 0 < alpha < a:
        msg = f"Need 0 < alpha < a, got a={a}, alpha={alpha}"
        raise PreconditionError(msg)
    return not (a % 2 and alpha % 2 and a >= 2 * alpha + 1)


def level_family_prediction(
    alpha: int, beta: int, gamma: int, t: int
) -> LevelPrediction:
    """Known status of the level ACI I_{alpha+t, beta+t, gamma+t, alpha, beta, gamma}.

    Outside the family's standing hypotheses the answer is OUTSIDE; the two
    exceptional tuples and the two open cases are reported as such.
    """
    alpha, beta, gamma = sorted((alpha, beta, gamma))
    inner = alpha + beta + gamma
    if alpha < 1 or gamma > 2 * (alpha + beta) or inner % 3 or 3 * t < inner:
        return LevelPrediction.OUTSIDE
    if (alpha, beta, gamma, t) in LEVEL_EXCEPTIONS:
        return LevelPrediction.EXCEPTIONAL
    if t % 2 == inner % 2 or (t % 2 and alpha == beta == gamma and alpha % 2 == 0):
        return LevelPrediction.HAS_WLP
    if t % 2 == 0:
        if alpha == beta or beta == gamma:
            return LevelPrediction.FAILS_WLP
        return LevelPrediction.OPEN_DISTINCT
    return LevelPrediction.OPEN_ODD_T
