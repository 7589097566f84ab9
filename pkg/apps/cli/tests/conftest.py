"""Shared fixtures for CLI tests."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

import pytest
from click.testing import CliRunner

from lzlef_cli.cli import cli
from lzlef_core.monomials import parse_ideal
from lzlef_lozenge.regions import build_region

if TYPE_CHECKING:
    from click.testing import Result

    from lzlef_lozenge.regions import TriangularRegion

try:
    import cairocffi
except (ImportError, OSError):  # OSError: the wheel is present but libcairo is not
    cairocffi = None


@pytest.fixture
def invoke():
    """Factory fixture: run the CLI with warnings silenced."""
    runner = CliRunner()

    def _invoke(*args: str) -> Result:
        return runner.invoke(cli, ["--log-level", "ERROR", *args])

    return _invoke


@pytest.fixture
def invoke_json(invoke):
    """Factory fixture: run the CLI, assert success, decode stdout."""

    def _invoke(*args: str) -> Any:
        result = invoke(*args)
        assert result.exit_code == 0, result.output
        return json.loads(result.output)

    return _invoke


@pytest.fixture
def make_region():
    def _make(text: str, d: int) -> TriangularRegion:
        return build_region(parse_ideal(text), d)

    return _make


@pytest.fixture
def svg_backend():
    if cairocffi is None:
        pytest.skip("libcairo is not available")
    return cairocffi
