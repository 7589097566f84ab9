"""Syzygy-bundle stability and splitting-type reports."""

from __future__ import annotations

from typing import Self

from pydantic import BaseModel, Field, computed_field, model_validator

from .common import MonomialField, RationalField  # noqa: TC001
from .enums import SplittingCase  # noqa: TC001


class StabilityReport(BaseModel):
    """Brenner's subset criterion evaluated over every proper subset."""

    semistable: bool
    stable: bool
    witness: list[MonomialField] | None = None
    witness_gcd: MonomialField | None = None
    slope_bound: RationalField

    @model_validator(mode="after")
    def stable_implies_semistable(self) -> Self:
        if self.stable and not self.semistable:
            msg = "A stable bundle is semistable"
            raise ValueError(msg)
        return self


class SplittingType(BaseModel):
    """Generic splitting type (p, q, r) with p <= q <= r."""

    p: int
    q: int
    r: int

    @model_validator(mode="after")
    def nondecreasing(self) -> Self:
        if not self.p <= self.q <= self.r:
            msg = f"Splitting type must be nondecreasing, got {self.as_tuple()}"
            raise ValueError(msg)
        return self

    @classmethod
    def from_entries(cls, entries: tuple[int, int, int] | list[int]) -> Self:
        p, q, r = sorted(entries)
        return cls(p=p, q=q, r=r)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def total(self) -> int:
        return self.p + self.q + self.r


class SplittingReport(BaseModel):
    """A splitting type plus the branch that produced it."""

    splitting_type: SplittingType
    case: SplittingCase | None = None
    semistable: bool


class AciSemistabilityTrace(BaseModel):
    """The three parameter conditions for semistability of an ACI."""

    degree: RationalField
    max_condition: bool = Field(description="max{a, b, c, alpha+beta+gamma} <= d")
    lcm_condition: bool = Field(
        description="min{alpha+beta+c, alpha+b+gamma, a+beta+gamma} >= d"
    )
    pair_condition: bool = Field(description="min{a+b, a+c, b+c} >= d")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def semistable(self) -> bool:
        return self.max_condition and self.lcm_condition and self.pair_condition


class TwoOfThreeReport(BaseModel):
    """Perfectly-punctured / tileable / semistable flags of one region."""

    perfectly_punctured: bool
    tileable: bool
    semistable: bool
    ideal_equals_region_ideal_sum: bool = Field(
        description="I = I + J(T_d(I))"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def consistent(self) -> bool:
        """Any two flags force the third, so exactly two may never hold."""
        flags = (self.perfectly_punctured, self.tileable, self.semistable)
        return sum(flags) != 2


class EquivalenceReport(BaseModel):
    """WLP, det Z(T_d(I)) != 0 and balanced splitting type, side by side."""

    characteristic: int = Field(ge=0)
    degree: int
    wlp: bool
    det_nonzero: bool
    splitting_type: SplittingType
    balanced_splitting: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def agree(self) -> bool:
        return self.wlp == self.det_nonzero == self.balanced_splitting


class BundleReport(BaseModel):
    """JSON payload of the bundle command."""

    semistable: bool
    stable: bool
    witness: list[MonomialField] | None = None
    splitting_type: list[int] | None = None
    case: SplittingCase | None = None
