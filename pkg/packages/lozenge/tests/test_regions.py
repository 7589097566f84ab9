"""Region construction, punctures, subregions and J(T)."""

from __future__ import annotations

import pytest

from lzlef_core.errors import PreconditionError
from lzlef_core.monomials import ONE, parse_ideal, parse_monomial
from lzlef_core.schemas import PunctureRelation
from lzlef_lozenge.regions import (
    Puncture,
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

I_1 = "x^5,y^5,z^5,xyz^2,xy^2z,x^2yz"
I_2 = "x^5,y^5,z^5,xyz"


def _labels(triangles):
    return [str(m) for m in triangles]


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def test_small_region_labels(make_region):
    region = make_region("xy,y^2,z^3", 4)
    assert _labels(region.up_triangles) == ["x^3", "x^2z", "xz^2", "yz^2"]
    assert _labels(region.down_triangles) == ["x^2", "xz", "yz", "z^2"]
    assert [str(p.generator) for p in region.punctures] == ["z^3", "xy", "y^2"]
    assert [p.side_length for p in region.punctures] == [1, 2, 2]


def test_maximal_ideal_in_degree_two_leaves_one_down_triangle(make_region):
    region = make_region("x,y,z", 2)
    assert region.up_triangles == ()
    assert region.down_triangles == (ONE,)
    assert balance(region) == -1
    assert not region.is_empty


def test_build_region_rejects_nonpositive_degree():
    with pytest.raises(PreconditionError):
        build_region(parse_ideal("x,y,z"), 0)


def test_build_region_is_cached():
    assert build_region(parse_ideal(I_2), 6) is build_region(parse_ideal(I_2), 6)


def test_generators_above_d_remove_nothing(make_region):
    region = make_region("x^9,y^9,z^9", 4)
    assert region.punctures == ()
    assert len(region.up_triangles) == 10


def test_vertex_punctures_are_kept(make_region):
    region = make_region("x^3,y^3,z^3", 3)
    assert [p.side_length for p in region.punctures] == [0, 0, 0]
    assert balance(region) == 3


def test_region_size_bounds(make_region):
    for d in range(1, 8):
        region = make_region("x^4,y^5,z^3,xyz", d)
        assert len(region.down_triangles) <= d * (d - 1) // 2
        assert len(region.up_triangles) <= d * (d + 1) // 2


# ---------------------------------------------------------------------------
# Punctures
# ---------------------------------------------------------------------------


def test_puncture_relations(make_region):
    region = make_region(I_2, 6)
    by_gen = {str(p.generator): p for p in region.punctures}
    assert (
        puncture_relation(by_gen["xyz"], by_gen["x^5"], 6) is PunctureRelation.DISJOINT
    )
    region_1 = make_region(I_1, 6)
    by_gen_1 = {str(p.generator): p for p in region_1.punctures}
    assert (
        puncture_relation(by_gen_1["xyz^2"], by_gen_1["xy^2z"], 6)
        is PunctureRelation.OVERLAPPING
    )
    p = by_gen["xyz"]
    assert puncture_relation(p, p, 6) is PunctureRelation.OVERLAPPING


def test_touching_punctures():
    p1 = Puncture(parse_monomial("x^2"), 2)
    p2 = Puncture(parse_monomial("y^2"), 2)
    assert puncture_relation(p1, p2, 4) is PunctureRelation.TOUCHING


def test_puncture_anchor_and_boundary():
    p = Puncture(parse_monomial("x^4yz"), 2)
    assert p.anchor == (4, 1, 1)
    assert not p.touches_boundary
    assert Puncture(parse_monomial("y^7"), 1).touches_boundary


def test_thirteen_tilings_classification(thirteen_tilings_region):
    classes = classify_punctures(thirteen_tilings_region)
    assert sorted(str(p.generator) for p in classes.non_floating) == [
        "x^7",
        "y^7",
        "z^6",
    ]
    assert len(classes.floating) == 3
    overlapping = [p for p in classes.floating if p.side_length == 2]
    assert len(overlapping) == 2
    assert (
        puncture_relation(*overlapping, thirteen_tilings_region.d)
        is PunctureRelation.OVERLAPPING
    )


def test_single_central_puncture_floats(make_region):
    classes = classify_punctures(make_region(I_2, 6))
    assert [str(p.generator) for p in classes.floating] == ["xyz"]


def test_classification_is_monotone_in_boundary_punctures(make_region):
    before = classify_punctures(make_region("x^6,y^6,z^6,xyz", 6))
    after = classify_punctures(make_region("x^6,y^6,z^6,xyz,x^3y", 6))
    grounded_before = {p.generator for p in before.non_floating}
    grounded_after = {p.generator for p in after.non_floating}
    assert grounded_before <= grounded_after
    assert parse_monomial("xyz") in grounded_after


def test_classification_partitions(thirteen_tilings_region):
    classes = classify_punctures(thirteen_tilings_region)
    assert len(classes.floating) + len(classes.non_floating) == len(
        thirteen_tilings_region.punctures
    )


# ---------------------------------------------------------------------------
# Subregions
# ---------------------------------------------------------------------------


def test_subregion_of_one_is_identity(thirteen_tilings_region):
    assert monomial_subregion(thirteen_tilings_region, ONE) == thirteen_tilings_region


def test_subregion_inside_puncture_is_empty(make_region):
    sub = monomial_subregion(make_region("x^3,y^6,z^6", 6), parse_monomial("x^3"))
    assert sub.is_empty
    assert sub.d == 3


def test_subregion_below_xy2z(thirteen_tilings_region):
    sub = monomial_subregion(thirteen_tilings_region, parse_monomial("xy^2z"))
    assert sub.d == 4
    assert len(sub.up_triangles) == 7
    assert len(sub.down_triangles) == 6
    assert sub == build_region(sub.ideal, 4)


def test_subregion_composes(thirteen_tilings_region):
    m1, m2 = parse_monomial("x"), parse_monomial("yz")
    direct = monomial_subregion(thirteen_tilings_region, m1 * m2)
    stepwise = monomial_subregion(monomial_subregion(thirteen_tilings_region, m1), m2)
    assert direct == stepwise


def test_subregion_degree_must_be_below_d(thirteen_tilings_region):
    with pytest.raises(PreconditionError):
        monomial_subregion(thirteen_tilings_region, parse_monomial("x^8"))


# ---------------------------------------------------------------------------
# Over-puncturing and J(T)
# ---------------------------------------------------------------------------


def test_over_puncturing_examples():
    assert over_puncturing(parse_ideal(I_1), 6) == 3
    assert over_puncturing(parse_ideal(I_2), 6) == 0
    assert over_puncturing(parse_ideal("x^4"), 4) == -4


def test_overlapping_punctures_give_the_same_region(make_region):
    region_1, region_2 = make_region(I_1, 6), make_region(I_2, 6)
    assert region_1 == region_2
    assert region_ideal(region_1) == parse_ideal(I_2)
    assert over_puncturing_region(region_1) == 0


def test_region_ideal_of_lone_down_triangle(make_region):
    assert region_ideal(make_region("x,y,z", 2)) == parse_ideal("x,y,z")


def test_region_ideal_of_full_triangle_is_zero(make_region):
    assert region_ideal(make_region("x^9,y^9,z^9", 5)).generators == ()


def test_region_ideal_recovers_ideal_without_overlaps(make_region):
    ideal = parse_ideal("x^6,y^5,z^7,x^2y^2z")
    assert region_ideal(build_region(ideal, 8)) == ideal


def test_region_ideal_contains_truncated_ideal(random_ideals):
    for ideal in random_ideals(seed=11, count=40, max_degree=6):
        for d in range(2, 8):
            region = build_region(ideal, d)
            j = region_ideal(region)
            truncated = ideal.generators_up_to(d - 1)
            assert all(j.contains(g) for g in truncated)
            overlap = any(
                puncture_relation(p, q, d) is PunctureRelation.OVERLAPPING
                for i, p in enumerate(region.punctures)
                for q in region.punctures[i + 1 :]
            )
            if not overlap:
                assert set(j.generators) == set(truncated)


def test_over_puncturing_counts_triangles_without_overlaps(random_ideals):
    checked = 0
    for ideal in random_ideals(seed=5, count=60, max_degree=7):
        for d in range(2, 9):
            region = build_region(ideal, d)
            if any(
                puncture_relation(p, q, d) is PunctureRelation.OVERLAPPING
                for i, p in enumerate(region.punctures)
                for q in region.punctures[i + 1 :]
            ):
                continue
            checked += 1
            assert over_puncturing(ideal, d) == -balance(region)
    assert checked > 0


# ---------------------------------------------------------------------------
# Balance
# ---------------------------------------------------------------------------


def test_balance_of_full_triangle(make_region):
    for d in range(1, 9):
        assert balance(make_region("x^9,y^9,z^9", d)) == d


def test_balanced_and_perfectly_punctured(make_region):
    region = make_region(I_2, 6)
    assert balance(region) == 0
    assert is_balanced(region)
    assert is_perfectly_punctured(region)
    assert not is_perfectly_punctured(make_region("x^2,y^2,z^2,xy,xz,yz", 3))
