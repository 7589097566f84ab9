"""Weak Lefschetz verdicts and axes-central matches."""

from __future__ import annotations

from typing import Literal, Self

from pydantic import BaseModel, Field, field_serializer, model_validator

from .enums import WlpRule  # noqa: TC001


class WlpVerdict(BaseModel):
    """Outcome of a weak Lefschetz decision in a fixed characteristic."""

    has_wlp: bool = Field(serialization_alias="wlp")
    characteristic: int = Field(ge=0, serialization_alias="char")
    rule: WlpRule
    critical_degrees: list[int] = Field(default_factory=list)
    det_value: int | None = Field(default=None, serialization_alias="det")
    obstruction_primes: list[int] | None = None

    @model_validator(mode="after")
    def verdict_matches_evidence(self) -> Self:
        if self.has_wlp == bool(self.critical_degrees):
            msg = "has_wlp must hold exactly when critical_degrees is empty"
            raise ValueError(msg)
        if (
            self.det_value is not None
            and self.characteristic == 0
            and self.has_wlp != (self.det_value != 0)
        ):
            msg = "In characteristic 0 a peak verdict must follow det != 0"
            raise ValueError(msg)
        return self

    @field_serializer("det_value")
    def _det_as_decimal(self, value: int | None) -> str | None:
        return None if value is None else str(value)

    def to_json_dict(self) -> dict[str, object]:
        return self.model_dump(mode="json", by_alias=True)


class AxesCentralForm(BaseModel):
    """Match of T_d(I) against one of the two axes-central shapes."""

    case: Literal[1, 2]
    d_minus_a: int
    d_minus_b: int
    d_minus_c: int
    inner_side: int = Field(description="d - (alpha + beta + gamma)")
    all_odd: bool
    order: tuple[int, int, int] = Field(
        description="Coordinate relabelling under which the shape matched"
    )
