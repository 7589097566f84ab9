"""Records written by the scan and verification commands."""

from __future__ import annotations

from typing import Self

from pydantic import (
    BaseModel,
    Field,
    computed_field,
    field_serializer,
    model_validator,
)

from .aci import AciParams  # noqa: TC001
from .enums import WlpRule  # noqa: TC001


class ScanRecord(BaseModel):
    """One almost complete intersection of a scanned family."""

    params: AciParams
    d: int | None = Field(
        description="a+b+c+alpha+beta+gamma over 3, null if fractional"
    )
    wlp_char0: bool
    rule: WlpRule
    det: int | None = None
    obstruction_primes: list[int] | None = None
    semistable: bool
    splitting_type: list[int] | None = None
    level: bool
    predicted_wlp: bool | None = Field(
        default=None, description="Closed-form answer of the family, when it has one"
    )

    @model_validator(mode="after")
    def determinant_matches_verdict(self) -> Self:
        if self.det is not None and (self.det != 0) != self.wlp_char0:
            msg = f"det={self.det} contradicts wlp_char0={self.wlp_char0}"
            raise ValueError(msg)
        return self

    @field_serializer("det")
    def _det_as_decimal(self, value: int | None) -> str | None:
        return None if value is None else str(value)

    @property
    def key(self) -> tuple[int, int, int, int, int, int]:
        return self.params.as_tuple()


class VerificationRow(BaseModel):
    """A worked example checked against a fresh computation."""

    name: str
    locus: str
    expected: str
    computed: str

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.expected == self.computed
