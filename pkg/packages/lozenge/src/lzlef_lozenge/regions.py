"""Triangular regions T_d(I), their punctures and monomial subregions."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from lzlef_core.errors import PreconditionError
from lzlef_core.monomials import (
    VARIABLE_MONOMIALS,
    Monomial,
    MonomialIdeal,
    colon,
    minimize,
    monomials_of_degree,
)
from lzlef_core.schemas import PunctureRelation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Puncture:
    """Up-pointing triangle of side d - deg(g) removed by a generator g."""

    generator: Monomial
    side_length: int

    def __post_init__(self) -> None:
        if self.side_length < 0:
            msg = f"Puncture of {self.generator} has negative side length"
            raise ValueError(msg)

    @property
    def anchor(self) -> tuple[int, int, int]:
        """Distances from the bottom, upper-right and upper-left edges."""
        return self.generator.exponents

    @property
    def touches_boundary(self) -> bool:
        return 0 in self.generator.exponents


@dataclass(frozen=True, slots=True)
class TriangularRegion:
    """Unit triangles of the side-d triangle whose labels lie outside I.

    Up triangles carry the degree d-1 labels and down triangles the degree
    d-2 labels, both in descending revlex order. Two regions are equal when
    they consist of the same triangles, whatever ideal cut them out.
    """

    d: int
    up_triangles: tuple[Monomial, ...]
    down_triangles: tuple[Monomial, ...]
    punctures: tuple[Puncture, ...] = field(compare=False)
    ideal: MonomialIdeal = field(compare=False)

    def __post_init__(self) -> None:
        if any(u.degree != self.d - 1 for u in self.up_triangles) or any(
            v.degree != self.d - 2 for v in self.down_triangles
        ):
            msg = f"Triangle label of the wrong degree in a region with d={self.d}"
            raise ValueError(msg)

    @property
    def is_empty(self) -> bool:
        return not self.up_triangles and not self.down_triangles

    def __str__(self) -> str:
        return (
            f"T_{self.d}{self.ideal}: {len(self.up_triangles)} up, "
            f"{len(self.down_triangles)} down"
        )


class PunctureClassification(NamedTuple):
    floating: tuple[Puncture, ...]
    non_floating: tuple[Puncture, ...]


_ZERO_IDEAL = MonomialIdeal(())


def _punctures(ideal: MonomialIdeal, d: int) -> tuple[Puncture, ...]:
    return tuple(Puncture(g, d - g.degree) for g in ideal.generators_up_to(d))


@lru_cache(maxsize=4096)
def build_region(ideal: MonomialIdeal, d: int) -> TriangularRegion:
    """T_d(I), cached per (ideal, d)."""
    if d < 1:
        msg = f"Triangular regions need d >= 1, got {d}"
        raise PreconditionError(msg)
    region = TriangularRegion(
        d=d,
        up_triangles=tuple(m for m in monomials_of_degree(d - 1) if m not in ideal),
        down_triangles=tuple(
            m for m in monomials_of_degree(d - 2) if m not in ideal
        ),
        punctures=_punctures(ideal, d),
        ideal=ideal,
    )
    logger.debug("Built %s", region)
    return region


def puncture_relation(p1: Puncture, p2: Puncture, d: int) -> PunctureRelation:
    """Two punctures meet in the puncture of lcm(g1, g2), if it fits in T_d."""
    side = d - p1.generator.lcm(p2.generator).degree
    if side >= 1:
        return PunctureRelation.OVERLAPPING
    if side == 0:
        return PunctureRelation.TOUCHING
    return PunctureRelation.DISJOINT


def monomial_subregion(region: TriangularRegion, m: Monomial) -> TriangularRegion:
    """Part of T inside the triangle cut off by m, relabelled by dividing by m."""
    if m.degree >= region.d:
        msg = f"Subregion of {m} needs deg < {region.d}"
        raise PreconditionError(msg)
    sub_d = region.d - m.degree
    ideal = colon(region.ideal, m) if region.ideal.generators else _ZERO_IDEAL
    return TriangularRegion(
        d=sub_d,
        up_triangles=tuple(u / m for u in region.up_triangles if m.divides(u)),
        down_triangles=tuple(v / m for v in region.down_triangles if m.divides(v)),
        punctures=_punctures(ideal, sub_d),
        ideal=ideal,
    )


def subregion_counts(region: TriangularRegion, m: Monomial) -> tuple[int, int]:
    """(#up, #down) of the monomial subregion of m without building it."""
    ups = sum(1 for u in region.up_triangles if m.divides(u))
    downs = sum(1 for v in region.down_triangles if m.divides(v))
    return ups, downs


def over_puncturing(ideal: MonomialIdeal, d: int) -> int:
    """Sum of puncture side lengths minus d."""
    return sum(d - g.degree for g in ideal.generators_up_to(d)) - d


def region_ideal(region: TriangularRegion) -> MonomialIdeal:
    """J(T): monomials of degree < d all of whose multiples among labels are gone."""
    d = region.d
    hit: set[Monomial] = set(region.up_triangles)
    missing: list[Monomial] = [
        m for m in monomials_of_degree(d - 1) if m not in hit
    ]
    for k in range(d - 2, -1, -1):
        below = {u / v for u in hit for v in VARIABLE_MONOMIALS if v.divides(u)}
        if k == d - 2:
            below.update(region.down_triangles)
        hit = below
        missing.extend(m for m in monomials_of_degree(k) if m not in hit)
    if not missing:
        return _ZERO_IDEAL
    return minimize(missing)


def over_puncturing_region(region: TriangularRegion) -> int:
    return over_puncturing(region_ideal(region), region.d)


def classify_punctures(region: TriangularRegion) -> PunctureClassification:
    """Non-floating punctures reach the boundary through touching or overlapping."""
    punctures = region.punctures
    grounded = {p for p in punctures if p.touches_boundary}
    changed = True
    while changed:
        changed = False
        for p in punctures:
            if p in grounded:
                continue
            if any(
                puncture_relation(p, q, region.d) is not PunctureRelation.DISJOINT
                for q in grounded
            ):
                grounded.add(p)
                changed = True
    return PunctureClassification(
        floating=tuple(p for p in punctures if p not in grounded),
        non_floating=tuple(p for p in punctures if p in grounded),
    )


def balance(region: TriangularRegion) -> int:
    """#up - #down."""
    return len(region.up_triangles) - len(region.down_triangles)


def is_balanced(region: TriangularRegion) -> bool:
    return balance(region) == 0


def is_perfectly_punctured(region: TriangularRegion) -> bool:
    return over_puncturing_region(region) == 0
