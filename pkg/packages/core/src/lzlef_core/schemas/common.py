"""Annotated field types shared by the result schemas."""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer, PlainValidator

from lzlef_core.monomials import Monomial, parse_monomial


def _coerce_monomial(value: object) -> object:
    if isinstance(value, str):
        return parse_monomial(value)
    return value


def _coerce_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction | int | str):
        return Fraction(value)
    msg = f"Cannot read {value!r} as a rational number"
    raise ValueError(msg)


MonomialField = Annotated[
    Monomial,
    BeforeValidator(_coerce_monomial),
    PlainSerializer(str, return_type=str),
]

RationalField = Annotated[
    Fraction,
    PlainValidator(_coerce_fraction),
    PlainSerializer(str, return_type=str),
]
