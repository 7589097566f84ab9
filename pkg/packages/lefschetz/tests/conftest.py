"""Shared fixtures for Lefschetz, stability and splitting-type tests."""

from __future__ import annotations

import os
from itertools import product

import pytest

from lzlef_core.monomials import MonomialIdeal, parse_ideal
from lzlef_core.schemas import AciParams
from lzlef_lefschetz.stability import aci_semistable

# Exhaustive sweeps run over a, b, c <= this bound; LZLEF_SWEEP_BOX_MAX
# narrows it for a quick local run.
DEFAULT_SWEEP_BOX_MAX = 8


def _sweep_box_max() -> int:
    return int(os.environ.get("LZLEF_SWEEP_BOX_MAX", DEFAULT_SWEEP_BOX_MAX))


def pytest_generate_tests(metafunc):
    # one test item per x-exponent, so xdist can spread the heavy sweeps
    if "pure_a" in metafunc.fixturenames:
        metafunc.parametrize("pure_a", range(2, _sweep_box_max() + 1))


@pytest.fixture
def make_ideal():
    """Factory fixture: ideal literal -> MonomialIdeal."""

    def _make(text: str) -> MonomialIdeal:
        return parse_ideal(text)

    return _make


@pytest.fixture
def make_aci():
    """Factory fixture: six integers -> AciParams."""

    def _make(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> AciParams:
        return AciParams.of(a, b, c, alpha, beta, gamma)

    return _make


@pytest.fixture(scope="session")
def sweep_box_max() -> int:
    return _sweep_box_max()


@pytest.fixture(scope="session")
def aci_box(sweep_box_max) -> list[AciParams]:
    """Every valid I_{a,b,c,alpha,beta,gamma} with a, b, c <= the sweep bound."""
    pairs = [
        (pure, inner)
        for pure in range(2, sweep_box_max + 1)
        for inner in range(1, pure)
    ]
    return [
        AciParams.of(a, b, c, alpha, beta, gamma)
        for (a, alpha), (b, beta), (c, gamma) in product(pairs, repeat=3)
    ]


@pytest.fixture(scope="session")
def balanced_aci_box(aci_box) -> list[AciParams]:
    """Tuples of the box meeting conditions (i)-(iv) of the WLP theorem."""
    return [
        p
        for p in aci_box
        if p.integer_degree is not None and aci_semistable(p).semistable
    ]


@pytest.fixture
def aci_slab(aci_box, pure_a) -> list[AciParams]:
    """The part of the sweep box with x-exponent pure_a."""
    return [p for p in aci_box if p.a == pure_a]


@pytest.fixture
def balanced_aci_slab(balanced_aci_box, pure_a) -> list[AciParams]:
    return [p for p in balanced_aci_box if p.a == pure_a]
