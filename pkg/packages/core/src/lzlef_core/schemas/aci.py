"""Parameters of I = (x^a, y^b, z^c, x^alpha y^beta z^gamma)."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import TYPE_CHECKING, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from lzlef_core.errors import ParseError, PreconditionError

if TYPE_CHECKING:
    from collections.abc import Iterator


class AciParams(BaseModel):
    """Almost complete intersection with positive inner exponents."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    c: int = Field(ge=1)
    alpha: int = Field(ge=1)
    beta: int = Field(ge=1)
    gamma: int = Field(ge=1)

    @model_validator(mode="after")
    def inner_below_pure_powers(self) -> Self:
        for name, inner, pure, pure_name in (
            ("alpha", self.alpha, self.a, "a"),
            ("beta", self.beta, self.b, "b"),
            ("gamma", self.gamma, self.c, "c"),
        ):
            if inner >= pure:
                msg = (
                    f"{name} must satisfy 0 < {name} < {pure_name} "
                    f"(got {name}={inner}, {pure_name}={pure})"
                )
                raise ValueError(msg)
        return self

    @classmethod
    def of(cls, a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> Self:
        """Construct, reporting bound violations as PreconditionError."""
        try:
            return cls(a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma)
        except ValidationError as exc:
            msg = "; ".join(str(e["msg"]) for e in exc.errors())
            raise PreconditionError(msg) from exc

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse "a,b,c,alpha,beta,gamma"."""
        values: list[int] = []
        start = 0
        for part in text.split(","):
            stripped = part.strip()
            if not stripped.isdigit():
                offset = start + len(part) - len(part.lstrip())
                msg = "Expected a positive integer"
                raise ParseError(msg, text, offset)
            values.append(int(stripped))
            start += len(part) + 1
        if len(values) != 6:
            msg = f"Expected 6 integers, got {len(values)}"
            raise ParseError(msg, text, 0)
        return cls.of(*values)

    @property
    def inner_degree(self) -> int:
        return self.alpha + self.beta + self.gamma

    @property
    def total(self) -> int:
        """a + b + c + alpha + beta + gamma."""
        return self.a + self.b + self.c + self.inner_degree

    @property
    def degree(self) -> Fraction:
        """d = total / 3, possibly fractional."""
        return Fraction(self.total, 3)

    @property
    def integer_degree(self) -> int | None:
        return self.total // 3 if self.total % 3 == 0 else None

    @property
    def label(self) -> str:
        return "I_{" + ",".join(str(v) for v in self.as_tuple()) + "}"

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.alpha, self.beta, self.gamma)

    def pairs(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        """(pure exponent, inner exponent) per variable."""
        return ((self.a, self.alpha), (self.b, self.beta), (self.c, self.gamma))

    def permuted(self, order: tuple[int, int, int]) -> AciParams:
        """Relabel the variables so that variable i becomes order[i]."""
        pairs = self.pairs()
        (a, alpha), (b, beta), (c, gamma) = (pairs[i] for i in order)
        return AciParams(a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma)

    def permutations(self) -> Iterator[AciParams]:
        """The six coordinate relabellings, identity first."""
        for order in permutations(range(3)):
            yield self.permuted(order)
