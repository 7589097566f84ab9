"""Randomised cross-checks between tileability criteria and matrix invariants."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from lzlef_core.monomials import monomials_of_degree
from lzlef_core.schemas import PunctureRelation
from lzlef_lozenge.linalg import determinant, permanent
from lzlef_lozenge.regions import (
    build_region,
    classify_punctures,
    is_balanced,
    is_perfectly_punctured,
    monomial_subregion,
    over_puncturing_region,
    puncture_relation,
)
from lzlef_lozenge.tilings import (
    biadjacency,
    count_tilings,
    is_tileable_matching,
    is_tileable_structural,
)

if TYPE_CHECKING:
    from lzlef_lozenge.regions import TriangularRegion

pytestmark = [pytest.mark.sweep, pytest.mark.timeout(300)]


@pytest.fixture
def sampled_regions(random_ideals) -> list[TriangularRegion]:
    """Distinct non-empty regions T_d(I), d <= 8, from reproducible random ideals."""
    seen: set[TriangularRegion] = set()
    regions = []
    for ideal in random_ideals(seed=20, count=160, max_degree=7):
        for d in range(2, 9):
            region = build_region(ideal, d)
            if region.is_empty or region in seen:
                continue
            seen.add(region)
            regions.append(region)
    return regions


def _has_over_punctured_subregion(region: TriangularRegion) -> bool:
    return any(
        over_puncturing_region(monomial_subregion(region, m)) > 0
        for k in range(region.d)
        for m in monomials_of_degree(k)
    )


def test_structural_criterion_matches_matching_oracle(sampled_regions):
    checked = 0
    for region in sampled_regions:
        if not is_balanced(region):
            continue
        assert is_tileable_structural(region) == is_tileable_matching(region), region
        checked += 1
    assert checked


def test_nonzero_determinant_implies_tileable(sampled_regions):
    for region in sampled_regions:
        z = biadjacency(region)
        if not z.is_square:
            continue
        det = determinant(z)
        per = permanent(z)
        assert abs(det) <= per, region
        assert per == count_tilings(region), region
        if det:
            assert is_tileable_matching(region), region


def test_even_floating_punctures_give_equal_permanent(sampled_regions):
    for region in sampled_regions:
        if not is_tileable_matching(region):
            continue
        floating = classify_punctures(region).floating
        if any(p.side_length % 2 for p in floating):
            continue
        if any(
            puncture_relation(p, q, region.d) is PunctureRelation.OVERLAPPING
            for i, p in enumerate(floating)
            for q in floating[i + 1 :]
        ):
            continue
        z = biadjacency(region)
        assert permanent(z) == abs(determinant(z)) != 0, region


def test_any_two_tiling_conditions_imply_the_third(sampled_regions):
    for region in sampled_regions:
        flags = (
            is_perfectly_punctured(region),
            not _has_over_punctured_subregion(region),
            is_tileable_matching(region),
        )
        assert sum(flags) != 2, (region, flags)
