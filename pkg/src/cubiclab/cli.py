"""cubiclab CLI - Command line interface."""

import functools
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click

from cubiclab import __version__
from cubiclab.env import use_config, write_default_config
from cubiclab.errors import LabError
from cubiclab.experiments.campaigns import CAMPAIGNS
from cubiclab.experiments.instances import CurveKind, PointKind

CAMPAIGN_NAMES = tuple(sorted(CAMPAIGNS))
POINT_KINDS = tuple(kind.value for kind in PointKind)
CURVE_KINDS = tuple(kind.value for kind in CurveKind)


def lab_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Report LabError as a red message and exit with status 1."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except LabError as e:
            click.secho(f"Error: {e}", fg="red", err=True)
            sys.exit(1)

    return wrapper


def int_list(ctx: click.Context, param: click.Parameter, value: str | None) -> list[int] | None:
    """Parse a comma-separated list of integers."""
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


def _load_instance(p: int, points_file: Path, curves_file: Path, irreducible: bool = False):
    from cubiclab.curves import read_curves, read_points
    from cubiclab.field import PrimeModulus
    from cubiclab.incidence import CurveSet, PointSet

    modulus = PrimeModulus(p)
    points = PointSet(tuple(read_points(points_file, modulus)), modulus)
    curves = CurveSet(tuple(read_curves(curves_file, modulus)), modulus, irreducible=irreducible)
    return points, curves


existing_file = click.Path(exists=True, dir_okay=False, path_type=Path)
output_file = click.Path(dir_okay=False, path_type=Path)


@click.group()
@click.version_option(version=__version__, prog_name="cubiclab")
@click.option("--config", "config_path", type=existing_file, help="YAML settings file")
@click.option("--verbose", "-v", count=True, help="Log progress (-v) or per-subset detail (-vv)")
def cli(config_path: Path | None, verbose: int) -> None:
    """cubiclab - Cubic Incidence Lab

    Exact point/cubic-curve incidence experiments over prime fields.
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    use_config(config_path)


@cli.command()
@click.option("--out", required=True, type=output_file, help="Where to write the YAML")
def config(out: Path) -> None:
    """Write the default settings as a YAML file to edit and pass with --config."""
    write_default_config(out)
    click.echo(f"Saved config: {out}")


@cli.command()
@click.option("--p", "p", required=True, type=int, help="Prime field size")
@click.option("--seed", required=True, type=int, help="Instance seed")
@click.option("--points", "n_points", default=0, show_default=True, help="|P|")
@click.option("--curves", "n_curves", default=0, show_default=True, help="|C|")
@click.option("--point-kind", type=click.Choice(POINT_KINDS), default="uniform-random")
@click.option("--curve-kind", type=click.Choice(CURVE_KINDS), default="uniform-irreducible")
@click.option("--carriers", default=2, show_default=True, help="Carrier cubics (adversarial)")
@click.option(
    "--reducible-counterexample",
    is_flag=True,
    help="Points on one line, curves = that line times a conic (not irreducible)",
)
@click.option("--points-file", required=True, type=output_file, help="Point CSV to write")
@click.option("--curves-file", required=True, type=output_file, help="Curve CSV to write")
@lab_errors
def gen(
    p: int,
    seed: int,
    n_points: int,
    n_curves: int,
    point_kind: str,
    curve_kind: str,
    carriers: int,
    reducible_counterexample: bool,
    points_file: Path,
    curves_file: Path,
) -> None:
    """Generate a seeded instance and write it as point and curve CSV files."""
    from cubiclab.curves import write_curves, write_points
    from cubiclab.experiments import InstanceSpec, generate_instance

    spec = InstanceSpec(
        p=p,
        point_kind=PointKind(point_kind),
        curve_kind=CurveKind(curve_kind),
        n_points=n_points,
        n_curves=n_curves,
        seed=seed,
        carrier_curves=carriers,
        reducible_counterexample=reducible_counterexample,
    )
    points, curves = generate_instance(spec)
    write_points(points_file, points)
    write_curves(curves_file, curves)
    click.echo(f"Wrote {len(points)} points to {points_file}")
    click.echo(f"Wrote {len(curves)} curves to {curves_file}")


@cli.command()
@click.option("--p", "p", required=True, type=int, help="Prime field size")
@click.option("--points-file", required=True, type=existing_file, help="Point CSV")
@click.option("--curves-file", required=True, type=existing_file, help="Curve CSV")
@click.option("--threads", type=int, help="Worker processes")
@click.option("--out", type=output_file, help="Per-curve counts CSV to write")
@lab_errors
def count(
    p: int, points_file: Path, curves_file: Path, threads: int | None, out: Path | None
) -> None:
    """Count incidences I(P, C) and print the total."""
    from cubiclab.incidence import incidence_counts_per_curve, write_counts

    points, curves = _load_instance(p, points_file, curves_file)
    counts = incidence_counts_per_curve(points, curves, threads)
    if out:
        write_counts(out, counts)
    click.echo(sum(counts))


@cli.command()
@click.option("--p", "p", required=True, type=int, help="Prime field size")
@click.option("--points-file", required=True, type=existing_file, help="Point CSV")
@click.option("--curves-file", required=True, type=existing_file, help="Curve CSV")
@click.option("--k", "k", default=11, show_default=True, help="Richness threshold (>= 11)")
@click.option("--subset-samples", type=int, help="Sampled 7-subsets when not enumerating")
@click.option("--seed", default=0, show_default=True, help="Subset sampling seed")
@click.option("--threads", type=int, help="Worker processes")
@click.option("--out", type=output_file, help="Per-subset CSV to write")
@lab_errors
def certify(
    p: int,
    points_file: Path,
    curves_file: Path,
    k: int,
    subset_samples: int | None,
    seed: int,
    threads: int | None,
    out: Path | None,
) -> None:
    """Run the incidence argument step by step on an instance and print a summary.

    Exits with status 1 if any step's invariant failed.
    """
    from cubiclab.experiments import ReportRenderer, pipeline_certificate, write_subset_records

    points, curves = _load_instance(p, points_file, curves_file, irreducible=True)
    report = pipeline_certificate(points, curves, k, subset_samples, seed, threads)
    if out:
        write_subset_records(out, report.records)

    click.echo(ReportRenderer().render("certificate.md", report.to_context()), nl=False)
    if not report.ok:
        click.secho(f"{len(report.violations)} violations", fg="red", err=True)
        sys.exit(1)


@cli.command()
@click.argument("name", type=click.Choice(CAMPAIGN_NAMES))
@click.option("--p", "p", default=13, show_default=True, help="Prime field size")
@click.option("--trials", default=100, show_default=True, help="Number of trials")
@click.option("--seed", default=0, show_default=True, help="Master seed")
@click.option("--threads", type=int, help="Worker processes")
@click.option("--out", type=output_file, help="Campaign CSV to write")
@click.option("--quiet", "-q", is_flag=True, help="No progress checklist on stderr")
@lab_errors
def verify(
    name: str,
    p: int,
    trials: int,
    seed: int,
    threads: int | None,
    out: Path | None,
    quiet: bool,
) -> None:
    """Run a verification campaign; exits with status 1 on any violation.

    \b
    Campaigns:
      duality       q lies on a curve of the flat iff phi(curve) lies on psi(q)
      lemma         7 points on an irreducible cubic span a 2-flat
      multiplicity  psi is at most two-to-one on the points of a cubic
      bezout        pair intersections stay within 9 / 3 / 6 points
      proposition   7 and 8 points in general position impose independent conditions
    """
    from cubiclab.experiments import CampaignParams, ReportRenderer, get_campaign

    params = CampaignParams(p=p, trials=trials, seed=seed, threads=threads)
    summary = get_campaign(name).execute(params, show_progress=not quiet)
    if out:
        summary.write_csv(out)

    click.echo(ReportRenderer().render("campaign.md", summary.to_context()), nl=False)
    sys.exit(summary.exit_code)


@cli.command("bound-report")
@click.option("--p", "p", required=True, type=int, help="Prime field size")
@click.option("--points-file", type=existing_file, help="Point CSV")
@click.option("--curves-file", type=existing_file, help="Curve CSV")
@click.option("--sizes-p", callback=int_list, help="Sweep: comma-separated values of |P|")
@click.option("--sizes-c", callback=int_list, help="Sweep: comma-separated values of |C|")
@click.option("--seed", default=0, show_default=True, help="Sweep instance seed")
@click.option("--threads", type=int, help="Worker processes")
@click.option("--out", type=output_file, help="Bound CSV to write (default: stdout)")
@lab_errors
def bound_report(
    p: int,
    points_file: Path | None,
    curves_file: Path | None,
    sizes_p: list[int] | None,
    sizes_c: list[int] | None,
    seed: int,
    threads: int | None,
    out: Path | None,
) -> None:
    """Compare measured incidences with every bound, for one instance or a grid sweep."""
    from cubiclab.bounds import bound_reports_csv, write_bound_reports
    from cubiclab.experiments import bound_report as report_instance
    from cubiclab.experiments import bound_report_sweep

    if points_file and curves_file:
        points, curves = _load_instance(p, points_file, curves_file)
        reports = [report_instance(points, curves, threads)]
    elif sizes_p is not None and sizes_c is not None:
        reports = bound_report_sweep(p, sizes_p, sizes_c, seed, threads)
    else:
        raise click.UsageError("give --points-file and --curves-file, or --sizes-p and --sizes-c")

    if out:
        write_bound_reports(out, reports)
    else:
        click.echo(bound_reports_csv(reports), nl=False)


@cli.command()
@click.option("--sizes", required=True, callback=int_list, help="Comma-separated |P| = |C|")
@click.option("--p", "p", default=2147483647, show_default=True, help="Prime field size")
@click.option("--threads", default="1", callback=int_list, help="Comma-separated thread counts")
@click.option("--seed", default=0, show_default=True, help="Instance seed")
@click.option("--out", type=output_file, help="Timing CSV to write")
@lab_errors
def bench(sizes: list[int], p: int, threads: list[int], seed: int, out: Path | None) -> None:
    """Time the counting engine and check that thread counts agree."""
    from cubiclab.experiments import bench as run_bench
    from cubiclab.experiments import write_bench_rows

    rows = run_bench(sizes, p, threads, seed)
    if out:
        write_bench_rows(out, rows)
    for row in rows:
        click.echo(
            f"size={row.size} threads={row.threads} I={row.incidences} "
            f"{row.seconds:.3f}s {row.pairs_per_second:.3e} pairs/s"
        )


if __name__ == "__main__":
    cli()
