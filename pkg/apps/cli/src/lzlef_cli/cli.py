"""lzlef: regions, weak Lefschetz verdicts, syzygy bundles and tilings."""

from __future__ import annotations

import functools
import json
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any

import click

from lzlef_core.config import settings
from lzlef_core.errors import ConsistencyError, ParseError, PreconditionError
from lzlef_core.monomials import parse_ideal
from lzlef_core.schemas import AciParams, BundleReport, RenderFormat, ScanFamily
from lzlef_lefschetz.restriction import splitting_type_oracle
from lzlef_lefschetz.splitting import splitting_type_formula
from lzlef_lefschetz.stability import aci_stability, semistability
from lzlef_lefschetz.wlp import aci_wlp, peak_degrees, wlp_rank_scan
from lzlef_lozenge.linalg import check_characteristic, permanent
from lzlef_lozenge.regions import build_region, is_balanced
from lzlef_lozenge.tilings import biadjacency, count_tilings, enumerate_tilings

from .render import render_ascii, render_svg
from .scan import family_params, run_scan
from .verification import verification_rows

if TYPE_CHECKING:
    from collections.abc import Callable

logger = logging.getLogger(__name__)

EXIT_FAILED_CHECKS = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INCONSISTENT = 4


def _exit_codes(func: Callable[..., None]) -> Callable[..., None]:
    """Map library errors onto the documented exit codes."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            func(*args, **kwargs)
        except (ParseError, PreconditionError) as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
        except ConsistencyError as exc:
            logger.exception("Internal consistency check failed")
            click.echo(f"Internal error: {exc}", err=True)
            sys.exit(EXIT_INCONSISTENT)
        except OSError as exc:
            click.echo(f"I/O error: {exc}", err=True)
            sys.exit(EXIT_IO)

    return wrapper


def _emit(payload: dict[str, Any], pretty: bool) -> None:
    if not pretty:
        click.echo(json.dumps(payload, indent=2))
        return
    width = max((len(key) for key in payload), default=0)
    for key, value in payload.items():
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value) or "-"
        click.echo(f"  {key:<{width}}  {'-' if value is None else value}")


def _one_input(aci: str | None, ideal: str | None) -> None:
    if (aci is None) == (ideal is None):
        msg = "Give exactly one of --aci or --ideal"
        raise click.UsageError(msg)


@click.group()
@click.option(
    "--log-level",
    default=settings.log_level,
    show_default=True,
    help="Root log level; logs go to stderr.",
)
def cli(log_level: str) -> None:
    """Lozenge tilings, weak Lefschetz and syzygy-bundle decisions."""
    logging.basicConfig(
        level=log_level.upper(),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------


@cli.command("region")
@click.argument("ideal")
@click.argument("d", type=click.IntRange(min=1))
@click.option(
    "--render",
    "render_format",
    type=click.Choice([f.value for f in RenderFormat]),
    default=RenderFormat.ASCII.value,
    show_default=True,
)
@click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), default=None
)
@click.option("--tiling", is_flag=True, help="Overlay one lozenge tiling (SVG).")
@_exit_codes
def region_cmd(
    ideal: str, d: int, render_format: str, out: Path | None, tiling: bool
) -> None:
    """Draw T_d(IDEAL), removed triangles shaded."""
    region = build_region(parse_ideal(ideal), d)
    overlay = None
    if tiling:
        found = enumerate_tilings(region, 1)
        if found:
            overlay = found[0]
        else:
            logger.warning("%s has no lozenge tiling to overlay", region)

    if RenderFormat(render_format) is RenderFormat.ASCII:
        if overlay is not None:
            logger.warning("Tilings are only drawn in SVG output")
        text = render_ascii(region)
        if out is None:
            click.echo(text, nl=False)
        else:
            out.write_text(text)
        return

    document = render_svg(region, overlay)
    if out is None:
        click.echo(document.decode())
    else:
        out.write_bytes(document)


# ---------------------------------------------------------------------------
# wlp / bundle
# ---------------------------------------------------------------------------


@cli.command("wlp")
@click.option("--aci", default=None, help="a,b,c,alpha,beta,gamma")
@click.option("--ideal", default=None, help='Ideal literal, e.g. "x^2,y^2,z^2".')
@click.option("--char", "characteristic", type=int, default=0, show_default=True)
@click.option("--pretty", is_flag=True, help="Human-readable table.")
@_exit_codes
def wlp_cmd(
    aci: str | None, ideal: str | None, characteristic: int, pretty: bool
) -> None:
    """Decide the weak Lefschetz property of R/I."""
    _one_input(aci, ideal)
    if aci is not None:
        payload = aci_wlp(AciParams.parse(aci), characteristic).to_json_dict()
    else:
        parsed = parse_ideal(ideal or "")
        payload = wlp_rank_scan(parsed, characteristic).to_json_dict()
        payload["peak_degrees"] = peak_degrees(parsed)
    _emit(payload, pretty)


@cli.command("bundle")
@click.option("--aci", default=None, help="a,b,c,alpha,beta,gamma")
@click.option("--ideal", default=None, help="Ideal literal.")
@click.option(
    "--degree",
    type=click.IntRange(min=1),
    default=None,
    help="Twist d; defaults to the top generator degree.",
)
@click.option("--char", "characteristic", type=int, default=0, show_default=True)
@click.option("--pretty", is_flag=True, help="Human-readable table.")
@_exit_codes
def bundle_cmd(
    aci: str | None,
    ideal: str | None,
    degree: int | None,
    characteristic: int,
    pretty: bool,
) -> None:
    """Stability and generic splitting type of the syzygy bundle."""
    _one_input(aci, ideal)
    if aci is not None and degree is not None:
        msg = "--degree only applies to --ideal; an ACI is twisted by its top degree"
        raise click.UsageError(msg)
    check_characteristic(characteristic)
    if aci is not None:
        p = AciParams.parse(aci)
        stability = aci_stability(p)
        if characteristic == 0:
            splitting = splitting_type_formula(p)
            entries, case = splitting.splitting_type.as_tuple(), splitting.case
        else:
            entries = splitting_type_oracle(p, characteristic).as_tuple()
            case = None
        report = BundleReport(
            semistable=stability.semistable,
            stable=stability.stable,
            witness=stability.witness,
            splitting_type=list(entries),
            case=case,
        )
    else:
        stability = semistability(parse_ideal(ideal or ""), degree)
        report = BundleReport(
            semistable=stability.semistable,
            stable=stability.stable,
            witness=stability.witness,
        )
    _emit(report.model_dump(mode="json"), pretty)


# ---------------------------------------------------------------------------
# tilings
# ---------------------------------------------------------------------------


@cli.command("tilings")
@click.argument("ideal")
@click.argument("d", type=click.IntRange(min=1))
@click.option("--count", "mode", flag_value="count", default=True)
@click.option("--list", "mode", flag_value="list")
@click.option(
    "--limit",
    type=click.IntRange(min=0),
    default=None,
    help="Stop after N tilings (LZLEF_LIMIT by default).",
)
@_exit_codes
def tilings_cmd(ideal: str, d: int, mode: str, limit: int | None) -> None:
    """Count or list the lozenge tilings of T_d(IDEAL)."""
    region = build_region(parse_ideal(ideal), d)
    if mode == "list":
        tilings = enumerate_tilings(region, limit)
        payload: dict[str, Any] = {
            "tilings": [
                [[str(down), str(up)] for down, up in tiling.lozenges]
                for tiling in tilings
            ]
        }
    else:
        balanced = is_balanced(region)
        payload = {
            "count": count_tilings(region, limit) if balanced else 0,
            "permanent": permanent(biadjacency(region)) if balanced else None,
        }
    click.echo(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# scan / verify-paper
# ---------------------------------------------------------------------------


@cli.command("scan")
@click.argument("family", type=click.Choice([f.value for f in ScanFamily]))
@click.option("--a-max", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--t-max", type=click.IntRange(min=0), default=8, show_default=True)
@click.option(
    "--inner-max", type=click.IntRange(min=0), default=4, show_default=True
)
@click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), required=True
)
@click.option("--jobs", type=click.IntRange(min=1), default=settings.jobs)
@_exit_codes
def scan_cmd(
    family: str, a_max: int, t_max: int, inner_max: int, out: Path, jobs: int
) -> None:
    """Write one JSONL record per almost complete intersection of FAMILY."""
    scan_family = ScanFamily(family)
    params = family_params(
        scan_family, a_max=a_max, t_max=t_max, inner_max=inner_max
    )
    written = run_scan(scan_family, params, out, jobs)
    click.echo(
        json.dumps(
            {"family": family, "tuples": len(params), "written": written},
            indent=2,
        )
    )


@cli.command("verify-paper")
@click.option("--pretty", is_flag=True, help="Human-readable table.")
@_exit_codes
def verify_cmd(pretty: bool) -> None:
    """Recompute every worked example; exit 1 if any disagrees."""
    rows = verification_rows()
    if pretty:
        for row in rows:
            status = "ok  " if row.passed else "FAIL"
            click.echo(f"{status} {row.name} [{row.locus}]")
            click.echo(f"       expected {row.expected}, computed {row.computed}")
    else:
        click.echo(json.dumps([row.model_dump(mode="json") for row in rows], indent=2))
    failed = [row for row in rows if not row.passed]
    if failed:
        click.echo(f"{len(failed)} of {len(rows)} checks failed", err=True)
        sys.exit(EXIT_FAILED_CHECKS)


if __name__ == "__main__":
    cli()
