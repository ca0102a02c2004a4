"""Command line front end: curves, horizons, classification, verification."""

import json
import sys

import click

from .algebra import element_from_dict
from .errors import BadGrid, DimensionMismatch, NotNonexpansive
from .moving import horizon, sample_curve
from .operators import classify
from .verify import default_specs, run_all


def _load_matrix(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(2)
    try:
        return element_from_dict(data)
    except DimensionMismatch as exc:
        click.echo("dimension error: %s" % exc, err=True)
        sys.exit(3)
    except (KeyError, TypeError, ValueError) as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(2)


def _fmt(value):
    return repr(float(value))


@click.group()
def main():
    """Moving norms, horizons and theorem checks for complex matrices.

    Matrix files are JSON objects {"dim": n, "re": rows, "im": rows}
    with "im" optional.
    """


@main.command()
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--lambda-max", default=1.0, show_default=True, help="Right endpoint of the grid.")
@click.option("--steps", default=33, show_default=True, help="Grid points including endpoints.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write CSV here instead of stdout.")
def curve(matrix_file, lambda_max, steps, out):
    """Sample lambda, m(lambda), am(lambda) on a uniform grid as CSV."""
    matrix = _load_matrix(matrix_file)
    try:
        result = sample_curve(matrix, lambda_max, steps)
    except BadGrid as exc:
        raise click.BadParameter(str(exc))
    lines = ["lambda,m,am"]
    for lam, m_value, am_value in zip(result.lambdas, result.m_values, result.am_values):
        lines.append("%s,%s,%s" % (_fmt(lam), _fmt(m_value), _fmt(am_value)))
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


@main.command(name="horizon")
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit the result as JSON.")
def horizon_cmd(matrix_file, as_json):
    """Locate the largest lambda with am(lambda) = 1."""
    matrix = _load_matrix(matrix_file)
    try:
        result = horizon(matrix)
    except NotNonexpansive as exc:
        click.echo("not nonexpansive: %s" % exc, err=True)
        sys.exit(4)
    if as_json:
        payload = {
            "value": result.value,
            "bracket_lo": result.bracket_lo,
            "bracket_hi": result.bracket_hi,
            "flat_at_one": result.flat_at_one,
            "iterations": result.iterations,
        }
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo("value %s" % _fmt(result.value))
        click.echo("bracket_lo %s" % _fmt(result.bracket_lo))
        click.echo("bracket_hi %s" % _fmt(result.bracket_hi))
        click.echo("flat_at_one %s" % ("true" if result.flat_at_one else "false"))
        click.echo("iterations %d" % result.iterations)


@main.command(name="classify")
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
def classify_cmd(matrix_file, as_json):
    """Report nonexpansive / monotone / firmly nonexpansive predicates."""
    matrix = _load_matrix(matrix_file)
    report = classify(matrix)
    if as_json:
        payload = {
            "ne": report.ne,
            "monotone": report.monotone,
            "fne": report.fne,
            "fne_via_horizon": report.fne_via_horizon,
            "norm": report.norm,
            "min_sym_eig": report.min_sym_eig,
            "fne_gap": report.fne_gap,
        }
        click.echo(json.dumps(payload, sort_keys=True))
        return
    for name, flag in (
        ("ne", report.ne),
        ("monotone", report.monotone),
        ("fne", report.fne),
        ("fne_via_horizon", report.fne_via_horizon),
    ):
        click.echo("%s %s" % (name, "true" if flag else "false"))
    click.echo("norm %s" % _fmt(report.norm))
    click.echo("min_sym_eig %s" % _fmt(report.min_sym_eig))
    click.echo("fne_gap %s" % _fmt(report.fne_gap))


@main.command(name="verify")
@click.option("--dims", default="2,3,4,8", show_default=True, help="Comma-separated matrix dimensions.")
@click.option("--trials", default=500, show_default=True, help="Trials per check, kind and dimension.")
@click.option(
    "--seed",
    default=0,
    show_default=True,
    envvar="MOVNORM_SEED",
    help="Root seed; MOVNORM_SEED applies when the flag is absent.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
def verify_cmd(dims, trials, seed, out):
    """Run every theorem check and emit a JSON report.

    Exits 1 when any check records a failure.
    """
    try:
        dim_list = tuple(int(part) for part in dims.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter("dims must be comma-separated integers")
    if not dim_list:
        raise click.BadParameter("dims must name at least one dimension")
    reports = run_all(default_specs(dims=dim_list, count=trials, seed=seed))
    payload = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        click.echo(payload, nl=False)
    total_failures = 0
    for report in reports:
        total_failures += report.failures
        click.echo(
            "%s: trials=%d failures=%d skipped=%d worst=%s"
            % (
                report.check_id,
                report.trials,
                report.failures,
                report.skipped,
                _fmt(report.worst_violation),
            ),
            err=True,
        )
    sys.exit(1 if total_failures else 0)


if __name__ == "__main__":
    main()
