"""Restriction to the line x + y + z = 0: ideals of K[x, y] and their syzygies.

Forms in S = K[x, y] are dense coefficient vectors. Dimensions of graded
pieces are ranks of the matrices spanned by the generators' multiples, so
the same code works over Q and over any prime field.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING

from lzlef_core.errors import ConsistencyError, PreconditionError
from lzlef_core.schemas import SplittingType
from lzlef_lozenge.linalg import IntegerMatrix, check_characteristic, rank

if TYPE_CHECKING:
    from collections.abc import Sequence

    from lzlef_core.schemas import AciParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BinaryForm:
    """Homogeneous form of K[x, y]; coefficients[k] multiplies x^(e-k) y^k."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def monomial(cls, ex: int, ey: int) -> BinaryForm:
        return cls((0,) * ey + (1,) + (0,) * ex)

    @classmethod
    def linear_power(cls, e: int) -> BinaryForm:
        """(x + y)^e."""
        return cls(tuple(comb(e, k) for k in range(e + 1)))

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        out = [0] * (self.degree + other.degree + 1)
        for i, u in enumerate(self.coefficients):
            if u:
                for j, v in enumerate(other.coefficients):
                    out[i + j] += u * v
        return BinaryForm(tuple(out))

    def multiples(self, t: int) -> list[list[int]]:
        """Coefficient rows of x^(t-e-k) y^k * self, k = 0 .. t - e."""
        width = t + 1
        rows = []
        for k in range(t - self.degree + 1):
            row = [0] * width
            row[k : k + self.degree + 1] = self.coefficients
            rows.append(row)
        return rows


def ideal_dimension(
    forms: Sequence[BinaryForm],
    t: int,
    characteristic: int = 0,
    *,
    saturated_from: int | None = None,
) -> int:
    """dim_K of the degree-t part of the ideal generated by forms.

    From degree saturated_from on, the ideal is known to contain all of S_t.
    """
    if t < 0:
        return 0
    if saturated_from is not None and t >= saturated_from:
        return t + 1
    rows = [row for f in forms if f.degree <= t for row in f.multiples(t)]
    if not rows:
        return 0
    return rank(IntegerMatrix.from_rows(rows), characteristic)


# ---------------------------------------------------------------------------
# Three-generator ideals (x^a, y^b, x^alpha y^beta (x+y)^gamma)
# ---------------------------------------------------------------------------


def mixed_generator_survives(
    a: int, b: int, alpha: int, beta: int, gamma: int
) -> bool:
    """True if a term of x^alpha y^beta (x+y)^gamma lies outside (x^a, y^b)."""
    low = max(0, beta + gamma - b + 1)
    high = min(gamma, a - alpha - 1)
    return low <= high


def _check_two_variable_params(
    a: int, b: int, alpha: int, beta: int, gamma: int
) -> None:
    if not (0 < alpha < a and 0 < beta < b and gamma >= 1):
        msg = (
            "Need 0 < alpha < a, 0 < beta < b and gamma >= 1, got "
            f"(a, b, alpha, beta, gamma) = {(a, b, alpha, beta, gamma)}"
        )
        raise PreconditionError(msg)
    if not mixed_generator_survives(a, b, alpha, beta, gamma):
        msg = (
            f"x^{alpha} y^{beta} (x+y)^{gamma} lies in (x^{a}, y^{b}); "
            "the generating set is not minimal"
        )
        raise PreconditionError(msg)


def regularity_2var(a: int, b: int, alpha: int, beta: int, gamma: int) -> int:
    """Castelnuovo-Mumford regularity of (x^a, y^b, x^alpha y^beta (x+y)^gamma)."""
    _check_two_variable_params(a, b, alpha, beta, gamma)
    half = -(-(a + b + alpha + beta + gamma) // 2)
    return -1 + max(
        a + beta,
        b + alpha,
        min(a + b, a + beta + gamma, b + alpha + gamma, half),
    )


def regularity_oracle(
    a: int, b: int, alpha: int, beta: int, gamma: int, characteristic: int = 0
) -> int:
    """Regularity read off the Hilbert function: top nonzero degree plus one."""
    _check_two_variable_params(a, b, alpha, beta, gamma)
    check_characteristic(characteristic)
    forms = (
        BinaryForm.monomial(a, 0),
        BinaryForm.monomial(0, b),
        BinaryForm.monomial(alpha, beta) * BinaryForm.linear_power(gamma),
    )
    top = max(
        t
        for t in range(a + b - 1)
        if t + 1 > ideal_dimension(forms, t, characteristic)
    )
    return top + 1


# ---------------------------------------------------------------------------
# Restricted almost complete intersections
# ---------------------------------------------------------------------------


def restricted_ideal_generators(p: AciParams) -> tuple[BinaryForm, ...]:
    """x^a, y^b, (x+y)^c and x^alpha y^beta (x+y)^gamma, in that order."""
    return (
        BinaryForm.monomial(p.a, 0),
        BinaryForm.monomial(0, p.b),
        BinaryForm.linear_power(p.c),
        BinaryForm.monomial(p.alpha, p.beta) * BinaryForm.linear_power(p.gamma),
    )


def _restricted_dimensions(
    p: AciParams, top: int, characteristic: int
) -> list[int]:
    forms = restricted_ideal_generators(p)
    return [
        ideal_dimension(forms, t, characteristic, saturated_from=p.a + p.b - 1)
        for t in range(top + 1)
    ]


def hilbert_oracle(p: AciParams, characteristic: int = 0) -> dict[int, int]:
    """dim_K [S/J]_t for t = 0 .. a+b+c+alpha+beta+gamma."""
    check_characteristic(characteristic)
    dims = _restricted_dimensions(p, p.total, characteristic)
    return {t: t + 1 - dim for t, dim in enumerate(dims)}


def minimal_generator_degrees(
    p: AciParams, characteristic: int = 0
) -> tuple[int, ...]:
    """Degrees of a minimal generating set of J, ascending."""
    check_characteristic(characteristic)
    forms = restricted_ideal_generators(p)
    found: list[int] = []
    for e in sorted({f.degree for f in forms}):
        lower = [f for f in forms if f.degree < e]
        upto = [f for f in forms if f.degree <= e]
        new = ideal_dimension(upto, e, characteristic) - ideal_dimension(
            lower, e, characteristic
        )
        found.extend([e] * new)
    return tuple(found)


def extraneous_generator_degrees(
    p: AciParams, characteristic: int = 0
) -> tuple[int, ...]:
    """Degrees of the listed generators of J left over by a minimal set."""
    remaining = sorted(f.degree for f in restricted_ideal_generators(p))
    for e in minimal_generator_degrees(p, characteristic):
        remaining.remove(e)
    return tuple(remaining)


def splitting_type_oracle(p: AciParams, characteristic: int = 0) -> SplittingType:
    """Splitting type from the Hilbert function of J.

    With generator degrees e_i, F(t) = sum max(0, t - e_i + 1) - dim[J]_t is
    the Hilbert function of Syz J = S(p) + S(q) + S(r); its second difference
    at t = u counts the summands S(-u).
    """
    check_characteristic(characteristic)
    degrees = [f.degree for f in restricted_ideal_generators(p)]
    top = max(p.a + p.b, p.c, p.inner_degree) + 2
    dims = _restricted_dimensions(p, top, characteristic)

    def free_part(t: int) -> int:
        if t < 0:
            return 0
        return sum(max(0, t - e + 1) for e in degrees) - dims[t]

    entries: list[int] = []
    for u in range(top + 1):
        mult = free_part(u) - 2 * free_part(u - 1) + free_part(u - 2)
        if mult < 0:
            msg = f"Negative syzygy multiplicity {mult} in degree {u} for {p.label}"
            raise ConsistencyError(msg)
        entries.extend([-u] * mult)
    if len(entries) != 3 or sum(entries) != -p.total:
        msg = (
            f"Syzygies of the restriction of {p.label} do not form a rank three "
            f"module of the expected degree: {entries}"
        )
        raise ConsistencyError(msg)
    result = SplittingType.from_entries(entries)
    logger.debug(
        "Splitting type of %s in char %d: %s",
        p.label,
        characteristic,
        result.as_tuple(),
    )
    return result
