"""Monomials and monomial ideals of K[x, y, z] under graded reverse-lex order."""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from lzlef_core.errors import ParseError, PreconditionError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from lzlef_core.schemas import AciParams

logger = logging.getLogger(__name__)

VARIABLES = ("x", "y", "z")


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class Monomial:
    """x^ex y^ey z^ez. Ordered by degree, then reverse lexicographically."""

    ex: int = 0
    ey: int = 0
    ez: int = 0

    def __post_init__(self) -> None:
        if self.ex < 0 or self.ey < 0 or self.ez < 0:
            msg = f"Negative exponent in ({self.ex}, {self.ey}, {self.ez})"
            raise ValueError(msg)

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.ex, self.ey, self.ez)

    def divides(self, other: Monomial) -> bool:
        """True iff self | other."""
        return self.ex <= other.ex and self.ey <= other.ey and self.ez <= other.ez

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(
            min(self.ex, other.ex), min(self.ey, other.ey), min(self.ez, other.ez)
        )

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(
            max(self.ex, other.ex), max(self.ey, other.ey), max(self.ez, other.ez)
        )

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            msg = f"{other} does not divide {self}"
            raise PreconditionError(msg)
        return Monomial(self.ex - other.ex, self.ey - other.ey, self.ez - other.ez)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return revlex_key(self) < revlex_key(other)

    def __str__(self) -> str:
        parts = [
            var if e == 1 else f"{var}^{e}"
            for var, e in zip(VARIABLES, self.exponents, strict=True)
            if e
        ]
        return "".join(parts) or "1"


ONE = Monomial()
X = Monomial(1, 0, 0)
Y = Monomial(0, 1, 0)
Z = Monomial(0, 0, 1)
VARIABLE_MONOMIALS = (X, Y, Z)


def revlex_key(m: Monomial) -> tuple[int, int, int]:
    """Sort key: higher degree first, then the smaller z and y exponents win."""
    return (m.degree, -m.ez, -m.ey)


def revlex_compare(m1: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as m1 is less than, equal to or greater than m2."""
    k1, k2 = revlex_key(m1), revlex_key(m2)
    return (k1 > k2) - (k1 < k2)


class MonomialArithmetic(NamedTuple):
    """Divisibility data of a pair (m1, m2); quotient is m2 / m1 when m1 | m2."""

    divides: bool
    gcd: Monomial
    lcm: Monomial
    quotient: Monomial | None


def monomial_arith(m1: Monomial, m2: Monomial) -> MonomialArithmetic:
    divides = m1.divides(m2)
    return MonomialArithmetic(
        divides=divides,
        gcd=m1.gcd(m2),
        lcm=m1.lcm(m2),
        quotient=m2 / m1 if divides else None,
    )


@functools.cache
def monomials_of_degree(j: int) -> tuple[Monomial, ...]:
    """All degree-j monomials, in descending revlex order."""
    if j < 0:
        return ()
    return tuple(
        Monomial(j - ey - ez, ey, ez) for ez in range(j + 1) for ey in range(j - ez + 1)
    )


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, descending revlex."""

    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = self.generators
        if list(gens) != sorted(gens, reverse=True):
            msg = "Generators must be listed in descending revlex order"
            raise ValueError(msg)
        for g in gens:
            if any(h != g and h.divides(g) for h in gens):
                msg = f"Generator {g} is not minimal"
                raise ValueError(msg)

    @classmethod
    def of(cls, *gens: Monomial) -> MonomialIdeal:
        return minimize(gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, m: object) -> bool:
        return isinstance(m, Monomial) and self.contains(m)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def pure_powers(self) -> tuple[int | None, int | None, int | None]:
        """Exponents (a, b, c) of x^a, y^b, z^c among the generators."""
        found: list[int | None] = [None, None, None]
        for g in self.generators:
            support = [i for i, e in enumerate(g.exponents) if e]
            if len(support) == 1:
                found[support[0]] = g.exponents[support[0]]
        return (found[0], found[1], found[2])

    @property
    def is_artinian(self) -> bool:
        return ONE in self.generators or all(e is not None for e in self.pure_powers())

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def generators_up_to(self, d: int) -> tuple[Monomial, ...]:
        return tuple(g for g in self.generators if g.degree <= d)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def minimize(gens: Iterable[Monomial]) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    pool = set(gens)
    if not pool:
        msg = "Cannot build an ideal from an empty generating set"
        raise PreconditionError(msg)
    kept = [g for g in pool if not any(h != g and h.divides(g) for h in pool)]
    return MonomialIdeal(tuple(sorted(kept, reverse=True)))


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal I : m."""
    return minimize(g / g.gcd(m) for g in ideal.generators)


def hilbert_function(ideal: MonomialIdeal, j: int) -> int:
    """dim_K [R/I]_j by direct enumeration."""
    return sum(1 for m in monomials_of_degree(j) if not ideal.contains(m))


def socle_monomials(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """Monomials m outside I with xm, ym, zm in I, descending revlex."""
    if not ideal.is_artinian:
        msg = f"Socle requested for non-Artinian ideal {ideal}"
        raise PreconditionError(msg)
    if ONE in ideal.generators:
        return ()
    a, b, c = ideal.pure_powers()
    assert a is not None and b is not None and c is not None
    found = [
        m
        for ex in range(a)
        for ey in range(b)
        for ez in range(c)
        if not ideal.contains(m := Monomial(ex, ey, ez))
        and all(ideal.contains(m * v) for v in VARIABLE_MONOMIALS)
    ]
    return tuple(sorted(found, reverse=True))


def socle_degrees(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Degrees of the socle monomials of R/I, ascending, with multiplicity."""
    return tuple(sorted(m.degree for m in socle_monomials(ideal)))


# ---------------------------------------------------------------------------
# Almost complete intersections
# ---------------------------------------------------------------------------


def aci_ideal(p: AciParams) -> MonomialIdeal:
    """(x^a, y^b, z^c, x^alpha y^beta z^gamma)."""
    ideal = minimize(
        (
            Monomial(p.a, 0, 0),
            Monomial(0, p.b, 0),
            Monomial(0, 0, p.c),
            Monomial(p.alpha, p.beta, p.gamma),
        )
    )
    if len(ideal) != 4:
        msg = f"{p.label} does not have four minimal generators: {ideal}"
        raise PreconditionError(msg)
    return ideal


def is_level(p: AciParams) -> bool:
    """R/I is level iff a - alpha = b - beta = c - gamma."""
    return p.a - p.alpha == p.b - p.beta == p.c - p.gamma


# ---------------------------------------------------------------------------
# Text grammar: "x^3 y z^2", "x3yz2", "1"; ideals are comma separated
# ---------------------------------------------------------------------------


def _parse_monomial_at(text: str, start: int, end: int) -> Monomial:
    exps = [0, 0, 0]
    i = start
    seen = False
    while i < end:
        ch = text[i]
        if ch.isspace() or ch == "*":
            i += 1
            continue
        if ch == "1" and not seen:
            j = i + 1
            while j < end and (text[j].isspace()):
                j += 1
            if j == end:
                return ONE
            msg = "Unexpected text after unit monomial"
            raise ParseError(msg, text, j)
        if ch not in VARIABLES:
            msg = f"Unexpected character {ch!r}"
            raise ParseError(msg, text, i)
        var = VARIABLES.index(ch)
        i += 1
        caret = i < end and text[i] == "^"
        if caret:
            i += 1
        digits_start = i
        while i < end and text[i].isdigit():
            i += 1
        if i > digits_start:
            exps[var] += int(text[digits_start:i])
        elif caret:
            msg = "Expected exponent after '^'"
            raise ParseError(msg, text, i)
        else:
            exps[var] += 1
        seen = True
    if not seen:
        msg = "Empty monomial"
        raise ParseError(msg, text, start)
    return Monomial(*exps)


def parse_monomial(text: str) -> Monomial:
    return _parse_monomial_at(text, 0, len(text))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse a comma-separated generator list and minimize it."""
    gens: list[Monomial] = []
    start = 0
    for part in text.split(","):
        gens.append(_parse_monomial_at(text, start, start + len(part)))
        start += len(part) + 1
    ideal = minimize(gens)
    logger.debug("Parsed %r as %s", text, ideal)
    return ideal
