"""Batch scans of almost complete intersection families into JSONL files."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import product
from typing import TYPE_CHECKING

from pydantic import ValidationError

from lzlef_core.errors import ConsistencyError, PreconditionError
from lzlef_core.monomials import aci_ideal, is_level
from lzlef_core.schemas import AciParams, LevelPrediction, ScanFamily, ScanRecord
from lzlef_lefschetz.splitting import splitting_type_formula
from lzlef_lefschetz.stability import aci_semistable
from lzlef_lefschetz.wlp import (
    aci_wlp,
    level_family_prediction,
    symmetric_prediction,
    wlp_peak,
)

if TYPE_CHECKING:
    from collections.abc import Iterable
    from pathlib import Path
    from typing import TextIO

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 500


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def family_params(
    family: ScanFamily, *, a_max: int = 8, t_max: int = 8, inner_max: int = 4
) -> list[AciParams]:
    """Parameter tuples of a family, in the order they are written."""
    match family:
        case ScanFamily.BOX:
            pure = range(2, a_max + 1)
            return [
                AciParams.of(a, b, c, alpha, beta, gamma)
                for a, b, c in product(pure, repeat=3)
                for alpha in range(1, a)
                for beta in range(1, b)
                for gamma in range(1, c)
            ]
        case ScanFamily.LEVEL:
            inner = range(1, inner_max + 1)
            return [
                AciParams.of(alpha + t, beta + t, gamma + t, alpha, beta, gamma)
                for alpha, beta, gamma in product(inner, repeat=3)
                if alpha <= beta <= gamma
                for t in range(1, t_max + 1)
            ]
        case ScanFamily.SYMMETRIC:
            return [
                AciParams.of(a, a, a, alpha, alpha, alpha)
                for a in range(2, a_max + 1)
                for alpha in range(1, a)
            ]
        case _:
            msg = f"Unknown scan family {family!r}"
            raise PreconditionError(msg)


def _predicted_wlp(family: ScanFamily, p: AciParams) -> bool | None:
    if family is ScanFamily.SYMMETRIC:
        return symmetric_prediction(p.a, p.alpha)
    if family is ScanFamily.LEVEL:
        t = p.a - p.alpha
        prediction = level_family_prediction(p.alpha, p.beta, p.gamma, t)
        if prediction is LevelPrediction.HAS_WLP:
            return True
        if prediction is LevelPrediction.FAILS_WLP:
            return False
    return None


def scan_record(family: ScanFamily, p: AciParams) -> ScanRecord:
    """Every characteristic-zero invariant of one tuple, cross-checked."""
    verdict = aci_wlp(p)
    trace = aci_semistable(p)
    d = p.integer_degree
    det = primes = None
    if d is not None and trace.semistable:
        try:
            peak = wlp_peak(aci_ideal(p), d)
        except PreconditionError:
            logger.debug("No peak determinant for %s", p.label)
        else:
            det, primes = peak.det_value, peak.obstruction_primes
    predicted = _predicted_wlp(family, p)
    if predicted is not None and predicted != verdict.has_wlp:
        msg = (
            f"{p.label}: closed form says WLP={predicted}, "
            f"computed {verdict.has_wlp}"
        )
        raise ConsistencyError(msg)
    splitting = splitting_type_formula(p).splitting_type
    try:
        return ScanRecord(
            params=p,
            d=d,
            wlp_char0=verdict.has_wlp,
            rule=verdict.rule,
            det=det,
            obstruction_primes=primes,
            semistable=trace.semistable,
            splitting_type=list(splitting.as_tuple()),
            level=is_level(p),
            predicted_wlp=predicted,
        )
    except ValidationError as exc:
        msg = f"{p.label}: inconsistent scan record: {exc}"
        raise ConsistencyError(msg) from exc


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def _completed_keys(out: Path) -> set[tuple[int, ...]]:
    """Keys already in out; a torn trailing line is dropped from the file."""
    if not out.exists():
        return set()
    kept: list[str] = []
    keys: set[tuple[int, ...]] = set()
    for line in out.read_text().splitlines():
        if not line.strip():
            continue
        try:
            record = ScanRecord.model_validate_json(line)
        except ValidationError:
            logger.warning("Dropping unreadable line in %s: %.60s", out, line)
            continue
        kept.append(line)
        keys.add(record.key)
    out.write_text("".join(f"{line}\n" for line in kept))
    return keys


def run_scan(
    family: ScanFamily, params: Iterable[AciParams], out: Path, jobs: int = 1
) -> int:
    """Append one JSONL record per tuple not yet in out, in input order.

    Returns the number of records written.
    """
    done = _completed_keys(out)
    pending = [p for p in params if p.as_tuple() not in done]
    logger.info(
        "Scanning %d %s tuples (%d already in %s) with %d job(s)",
        len(pending),
        family,
        len(done),
        out,
        jobs,
    )
    work = partial(scan_record, family)
    with out.open("a") as fh:
        if jobs == 1 or len(pending) < 2:
            records: Iterable[ScanRecord] = map(work, pending)
            written = _write_records(fh, records)
        else:
            chunksize = max(1, len(pending) // (jobs * 8))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                written = _write_records(
                    fh, pool.map(work, pending, chunksize=chunksize)
                )
    return written


def _write_records(fh: TextIO, records: Iterable[ScanRecord]) -> int:
    written = 0
    for record in records:
        fh.write(record.model_dump_json() + "\n")
        written += 1
        if written % PROGRESS_EVERY == 0:
            logger.info("Wrote %d records", written)
    return written
