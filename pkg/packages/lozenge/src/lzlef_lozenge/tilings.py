"""Bi-adjacency matrices, tileability criteria and lozenge tiling enumeration."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import TYPE_CHECKING

import networkx as nx
from networkx.algorithms import bipartite

from lzlef_core.config import settings
from lzlef_core.errors import PreconditionError
from lzlef_core.monomials import VARIABLE_MONOMIALS, Monomial, monomials_of_degree

from .linalg import IntegerMatrix
from .regions import balance, is_balanced, subregion_counts

if TYPE_CHECKING:
    from collections.abc import Iterator

    from .regions import TriangularRegion

logger = logging.getLogger(__name__)

Lozenge = tuple[Monomial, Monomial]


@dataclass(frozen=True, slots=True)
class Tiling:
    """Perfect matching of down triangles to edge-adjacent up triangles."""

    lozenges: tuple[Lozenge, ...]

    def __post_init__(self) -> None:
        for down, up in self.lozenges:
            if up.degree != down.degree + 1 or not down.divides(up):
                msg = f"Triangles {down} and {up} do not share an edge"
                raise ValueError(msg)

    def covers(self, region: TriangularRegion) -> bool:
        """Every triangle of the region lies in exactly one lozenge."""
        downs = [down for down, _ in self.lozenges]
        ups = [up for _, up in self.lozenges]
        return (
            sorted(downs) == sorted(region.down_triangles)
            and sorted(ups) == sorted(region.up_triangles)
        )


def orientation(lozenge: Lozenge) -> int:
    """Index of the variable that takes the down label to the up label."""
    down, up = lozenge
    return VARIABLE_MONOMIALS.index(up / down)


def _neighbours(region: TriangularRegion) -> dict[Monomial, list[Monomial]]:
    ups = set(region.up_triangles)
    return {
        v: [v * var for var in VARIABLE_MONOMIALS if v * var in ups]
        for v in region.down_triangles
    }


@lru_cache(maxsize=4096)
def biadjacency(region: TriangularRegion) -> IntegerMatrix:
    """Rows: down labels, columns: up labels, 1 where they share an edge."""
    col = {u: j for j, u in enumerate(region.up_triangles)}
    rows = []
    for adjacent in _neighbours(region).values():
        row = [0] * len(col)
        for u in adjacent:
            row[col[u]] = 1
        rows.append(row)
    return IntegerMatrix.from_rows(rows, cols=len(col))


# ---------------------------------------------------------------------------
# Tileability
# ---------------------------------------------------------------------------


def is_tileable_matching(region: TriangularRegion) -> bool:
    """Tileable iff the triangle adjacency graph has a perfect matching."""
    if not is_balanced(region):
        return False
    if region.is_empty:
        return True
    graph = nx.Graph()
    downs = [("down", v) for v in region.down_triangles]
    graph.add_nodes_from(downs, bipartite=0)
    graph.add_nodes_from((("up", u) for u in region.up_triangles), bipartite=1)
    graph.add_edges_from(
        (("down", v), ("up", u))
        for v, adjacent in _neighbours(region).items()
        for u in adjacent
    )
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=downs)
    return len(matching) == 2 * len(downs)


def first_heavy_subregion(region: TriangularRegion) -> Monomial | None:
    """First m (ascending degree, descending revlex) whose subregion has more
    down than up triangles."""
    for k in range(region.d):
        for m in monomials_of_degree(k):
            ups, downs = subregion_counts(region, m)
            if downs > ups:
                return m
    return None


def is_tileable_structural(region: TriangularRegion) -> bool:
    """Tileable iff no monomial subregion of a balanced region is down-heavy."""
    if not is_balanced(region):
        msg = (
            f"Structural criterion needs a balanced region (balance "
            f"{balance(region)}); use is_tileable_matching instead"
        )
        raise PreconditionError(msg)
    heavy = first_heavy_subregion(region)
    if heavy is not None:
        logger.debug("Subregion of %s is down-heavy in %s", heavy, region)
        return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def iter_tilings(region: TriangularRegion) -> Iterator[Tiling]:
    """All tilings, by backtracking on the most constrained down triangle."""
    if not is_balanced(region):
        return
    neighbours = _neighbours(region)
    used: set[Monomial] = set()
    chosen: list[Lozenge] = []

    def search(remaining: list[Monomial]) -> Iterator[Tiling]:
        if not remaining:
            yield Tiling(tuple(chosen))
            return
        best_index, best_free = 0, None
        for index, v in enumerate(remaining):
            free = [u for u in neighbours[v] if u not in used]
            if best_free is None or len(free) < len(best_free):
                best_index, best_free = index, free
                if not free:
                    return
        assert best_free is not None
        v = remaining[best_index]
        rest = remaining[:best_index] + remaining[best_index + 1 :]
        for u in best_free:
            used.add(u)
            chosen.append((v, u))
            yield from search(rest)
            chosen.pop()
            used.discard(u)

    yield from search(list(region.down_triangles))


def enumerate_tilings(
    region: TriangularRegion, limit: int | None = None
) -> list[Tiling]:
    """Tilings of the region, at most limit of them (settings.limit by default)."""
    cap = settings.limit if limit is None else limit
    tilings = list(islice(iter_tilings(region), cap))
    if len(tilings) == cap:
        logger.info("Tiling enumeration stopped at the limit of %d", cap)
    return tilings


def count_tilings(region: TriangularRegion, limit: int | None = None) -> int:
    cap = settings.limit if limit is None else limit
    return sum(1 for _ in islice(iter_tilings(region), cap))
