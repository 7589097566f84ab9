"""Shared fixtures for core tests."""

from __future__ import annotations

import pytest

from lzlef_core.monomials import MonomialIdeal, parse_ideal
from lzlef_core.schemas import AciParams


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
