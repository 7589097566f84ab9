"""Shared fixtures for region and tiling tests."""

from __future__ import annotations

import random

import pytest

from lzlef_core.monomials import Monomial, MonomialIdeal, minimize, parse_ideal
from lzlef_lozenge.regions import TriangularRegion, build_region

THIRTEEN_TILINGS_IDEAL = "x^7,y^7,z^6,xy^4z^2,x^3yz^2,x^4yz"


@pytest.fixture
def make_region():
    """Factory fixture: (ideal literal, d) -> TriangularRegion."""

    def _make(text: str, d: int) -> TriangularRegion:
        return build_region(parse_ideal(text), d)

    return _make


@pytest.fixture
def thirteen_tilings_region() -> TriangularRegion:
    """T_8 with three corner punctures and three floating ones."""
    return build_region(parse_ideal(THIRTEEN_TILINGS_IDEAL), 8)


@pytest.fixture
def random_ideals():
    """Factory fixture: reproducible Artinian ideals with a few mixed generators."""

    def _generate(seed: int, count: int, max_degree: int) -> list[MonomialIdeal]:
        rng = random.Random(seed)
        ideals = []
        for _ in range(count):
            gens = [
                Monomial(rng.randint(1, max_degree + 1), 0, 0),
                Monomial(0, rng.randint(1, max_degree + 1), 0),
                Monomial(0, 0, rng.randint(1, max_degree + 1)),
            ]
            for _ in range(rng.randint(0, 3)):
                deg = rng.randint(2, max_degree)
                ex = rng.randint(0, deg)
                ey = rng.randint(0, deg - ex)
                gens.append(Monomial(ex, ey, deg - ex - ey))
            ideals.append(minimize(gens))
        return ideals

    return _generate
