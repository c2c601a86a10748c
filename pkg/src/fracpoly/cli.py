"""Command-line surface: tables, operator evaluation, identity verification.

Output goes to stdout in text, CSV (RFC 4180) or JSON; diagnostics go to
stderr.  Exit codes: 0 success / all suites pass, 1 verification failure,
2 usage or parameter error.  Identical invocations produce byte-identical
output.  FRACPOLY_PRECISION overrides the default precision (bits).
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys

import click

from .errors import FracPolyError
from .families import FamilyKind, FamilyParams, family_numbers, family_polynomial
from .fractional import (
    CaputoOrder,
    caputo_apostol_bernoulli,
    caputo_apostol_bernoulli_higher,
    caputo_derivative_poly,
    caputo_family_poly,
    caputo_quadrature_oracle,
    eval_frac_expansion,
    rl_integral_poly,
)
from .mittag import MLParams, ml_eval, ml_one_m_closed
from .scalars import DEFAULT_PRECISION, Scalar, as_scalar
from .verify import SUITES, SUITE_ALIASES, RunConfig, run_suite

FORMATS = ("text", "csv", "json")


class ScalarParam(click.ParamType):
    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, Scalar):
            return value
        try:
            return as_scalar(str(value).strip())
        except (ValueError, ZeroDivisionError) as exc:
            self.fail(f"cannot parse number {value!r}: {exc}", param, ctx)


SCALAR = ScalarParam()


def _default_precision() -> int:
    env = os.environ.get("FRACPOLY_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise click.UsageError(f"FRACPOLY_PRECISION must be an integer, got {env!r}")
    return DEFAULT_PRECISION


def _resolve_precision(precision: int | None) -> int:
    return precision if precision is not None else _default_precision()


def _scalar_cell(s: Scalar) -> dict:
    if s.is_exact:
        return {"value": str(s), "domain": "rational"}
    return {"value": str(s), "domain": "float", "precision": s.precision}


def _emit_table(columns: list[str], rows: list[list], fmt: str):
    if fmt == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        click.echo(json.dumps(payload, indent=2, sort_keys=False))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if v is None else str(v) for v in row])
        click.echo(buf.getvalue(), nl=False)
    else:
        str_rows = [[("" if v is None else str(v)) for v in row] for row in rows]
        widths = [
            max(len(columns[i]), *(len(r[i]) for r in str_rows)) if str_rows else len(columns[i])
            for i in range(len(columns))
        ]
        click.echo("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
        for r in str_rows:
            click.echo("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())


def _family_params(family: str, alpha: Scalar, lam: Scalar, h: int) -> FamilyParams:
    try:
        return FamilyParams(FamilyKind(family), alpha, lam, h)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _family_options(fn):
    fn = click.option("--family", type=click.Choice([k.value for k in FamilyKind]),
                      default="bernoulli", show_default=True, help="Polynomial family kind.")(fn)
    fn = click.option("--alpha", type=SCALAR, default="1", show_default=True,
                      help="Family parameter alpha (> 0).")(fn)
    fn = click.option("--lambda", "lam", type=SCALAR, default="1", show_default=True,
                      help="Family parameter lambda (> 0).")(fn)
    fn = click.option("--h", type=int, default=1, show_default=True,
                      help="Order h (>= 2 only for bernoulli at alpha = 1).")(fn)
    return fn


def _common_options(fn):
    fn = click.option("--precision", type=int, default=None,
                      help=f"Working precision in bits (default {DEFAULT_PRECISION}, "
                           "or FRACPOLY_PRECISION).")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text",
                      show_default=True, help="Output format.")(fn)
    return fn


@click.group()
def cli():
    """Exact and arbitrary-precision generalized Bernoulli/Euler/Genocchi
    polynomial families, fractional operators on them, and machine
    verification of their identities."""


@cli.command()
@_family_options
@_common_options
@click.option("--max", "max_index", type=int, required=True, help="Largest index to print.")
def numbers(family, alpha, lam, h, precision, fmt, max_index):
    """Print family numbers 0..MAX (generating-series coefficients)."""
    precision = _resolve_precision(precision)
    if max_index < 0:
        raise click.UsageError("--max must be nonnegative")
    p = _family_params(family, alpha, lam, h)
    nums = family_numbers(p, max_index, precision)
    rows = []
    for n, v in enumerate(nums):
        cell = _scalar_cell(v)
        rows.append([n, cell["value"], cell["domain"],
                     cell.get("precision") if not v.is_exact else None])
    _emit_table(["index", "value", "domain", "precision"], rows, fmt)


@cli.command()
@_family_options
@_common_options
@click.option("--degree", type=int, required=True, help="Polynomial degree n.")
def poly(family, alpha, lam, h, precision, fmt, degree):
    """Print the coefficients of the degree-n family polynomial."""
    precision = _resolve_precision(precision)
    if degree < 0:
        raise click.UsageError("--degree must be nonnegative")
    p = _family_params(family, alpha, lam, h)
    q = family_polynomial(p, degree, precision)
    rows = []
    for k, c in enumerate(q.coeffs):
        cell = _scalar_cell(c)
        rows.append([k, cell["value"], cell["domain"],
                     cell.get("precision") if not c.is_exact else None])
    _emit_table(["power", "coefficient", "domain", "precision"], rows, fmt)


@cli.command("eval")
@_family_options
@_common_options
@click.option("--degree", type=int, required=True, help="Polynomial degree n.")
@click.option("--at", "at_", type=SCALAR, required=True, help="Evaluation point x.")
def eval_cmd(family, alpha, lam, h, precision, fmt, degree, at_):
    """Evaluate the degree-n family polynomial at a point."""
    precision = _resolve_precision(precision)
    if degree < 0:
        raise click.UsageError("--degree must be nonnegative")
    p = _family_params(family, alpha, lam, h)
    value = family_polynomial(p, degree, precision).evaluate(at_)
    cell = _scalar_cell(value)
    rows = [[str(at_), cell["value"], cell["domain"],
             cell.get("precision") if not value.is_exact else None]]
    _emit_table(["x", "value", "domain", "precision"], rows, fmt)


@cli.command()
@_common_options
@click.option("--alpha", type=SCALAR, required=True, help="First parameter (> 0).")
@click.option("--beta", type=SCALAR, default="1", show_default=True, help="Second parameter (> 0).")
@click.option("--z", type=SCALAR, required=True, help="Evaluation point (|z| <= 50).")
@click.option("--tol", type=SCALAR, default=None, help="Relative tolerance of the sum.")
@click.option("--closed-form", is_flag=True,
              help="Also print the subtracted-exponential closed form "
                   "(alpha = 1, integer beta >= 2).")
def mleval(precision, fmt, alpha, beta, z, tol, closed_form):
    """Evaluate the two-parameter Mittag-Leffler function."""
    precision = _resolve_precision(precision)
    try:
        p = MLParams(alpha, beta)
        value = ml_eval(p, z, tol, precision)
        rows = [["series", str(value)]]
        if closed_form:
            if alpha != 1 or not beta.is_integer() or int(beta) < 2:
                raise click.UsageError(
                    "--closed-form requires alpha = 1 and integer beta >= 2"
                )
            rows.append(["closed-form", str(ml_one_m_closed(int(beta), z, precision))])
    except FracPolyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit_table(["route", "value"], rows, fmt)


def _closed_form_expansion(p: FamilyParams, degree: int, ord_: CaputoOrder, precision: int):
    if p.kind is FamilyKind.BERNOULLI and p.alpha == 1:
        if p.h > 1:
            return caputo_apostol_bernoulli_higher(degree, p.h, p.lam, ord_, precision)
        return caputo_apostol_bernoulli(degree, p.lam, ord_, precision)
    return caputo_family_poly(p, degree, ord_, precision)


@cli.command()
@_family_options
@_common_options
@click.option("--degree", type=int, required=True, help="Family polynomial degree m.")
@click.option("--order", type=SCALAR, required=True, help="Fractional order (> 0).")
@click.option("--at", "at_", type=SCALAR, default=None,
              help="Also evaluate at t > 0 and print the quadrature cross-check.")
def fracderiv(family, alpha, lam, h, precision, fmt, degree, order, at_):
    """Caputo derivative of a family polynomial: closed-form terms."""
    precision = _resolve_precision(precision)
    if degree < 0:
        raise click.UsageError("--degree must be nonnegative")
    p = _family_params(family, alpha, lam, h)
    try:
        ord_ = CaputoOrder(order)
        polynomial = family_polynomial(p, degree, precision)
        if degree < ord_.n:
            click.echo(
                f"note: degree {degree} < ceil(order) = {ord_.n}; the derivative "
                "vanishes termwise and no closed-form expansion applies",
                err=True,
            )
            expansion = caputo_derivative_poly(polynomial, ord_, precision)
        else:
            expansion = _closed_form_expansion(p, degree, ord_, precision)
        _emit_expansion(expansion, _route_values(expansion, polynomial, ord_, at_, precision), fmt)
    except FracPolyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _route_values(expansion, polynomial, ord_, at_, precision):
    if at_ is None:
        return None
    value = eval_frac_expansion(expansion, at_, precision) if len(expansion) \
        else Scalar.big(0, precision)
    routes = [["closed-form", str(value)]]
    if ord_ is not None:
        routes.append(["quadrature", str(caputo_quadrature_oracle(polynomial, ord_, at_, precision))])
    return routes


def _emit_expansion(expansion, routes, fmt):
    """Terms table, plus the evaluated routes; one JSON document either way."""
    rows = [[str(t.coefficient), str(t.exponent)] for t in expansion]
    if fmt == "json":
        payload = {"terms": [dict(zip(("coefficient", "exponent"), r)) for r in rows]}
        if routes is not None:
            payload["values"] = {name: value for name, value in routes}
        click.echo(json.dumps(payload, indent=2))
        return
    _emit_table(["coefficient", "exponent"], rows, fmt)
    if routes is not None:
        _emit_table(["route", "value"], routes, fmt)


@cli.command()
@_family_options
@_common_options
@click.option("--degree", type=int, required=True, help="Family polynomial degree m.")
@click.option("--order", type=SCALAR, required=True, help="Integral order (> 0).")
@click.option("--at", "at_", type=SCALAR, default=None, help="Evaluate the result at t > 0.")
def fracint(family, alpha, lam, h, precision, fmt, degree, order, at_):
    """Riemann-Liouville integral of a family polynomial."""
    precision = _resolve_precision(precision)
    if degree < 0:
        raise click.UsageError("--degree must be nonnegative")
    p = _family_params(family, alpha, lam, h)
    try:
        polynomial = family_polynomial(p, degree, precision)
        expansion = rl_integral_poly(polynomial, order, precision)
        _emit_expansion(expansion, _route_values(expansion, polynomial, None, at_, precision), fmt)
    except FracPolyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@cli.command()
@_common_options
@click.option("--family", type=click.Choice([k.value for k in FamilyKind]), default=None,
              help="Restrict suites to one family kind.")
@click.option("--alpha", type=SCALAR, default=None, help="Restrict the family alpha grid.")
@click.option("--lambda", "lam", type=SCALAR, default=None, help="Restrict the lambda grid.")
@click.option("--h", type=int, default=None, help="Restrict the order-h grid.")
@click.option("--order", "orders", type=SCALAR, multiple=True,
              help="Restrict the fractional-order grid (repeatable).")
@click.option("--max-degree", type=int, default=None, help="Cap the degree/index grid.")
@click.option("--tolerance", type=SCALAR, default=None, help="Override every suite tolerance.")
@click.argument("suites", nargs=-1)
def verify(precision, fmt, family, alpha, lam, h, orders, max_degree, tolerance, suites):
    """Run identity suites (names or 'all') and report pass/fail."""
    precision = _resolve_precision(precision)
    known = sorted(set(SUITES) | set(SUITE_ALIASES))
    if not suites or "all" in suites:
        selected = list(SUITES)
    else:
        bad = [s for s in suites if s not in SUITES and s not in SUITE_ALIASES]
        if bad:
            click.echo(
                f"error: unknown suite(s) {', '.join(bad)}; valid: {', '.join(known)}",
                err=True,
            )
            sys.exit(2)
        selected = list(suites)
    cfg = RunConfig(
        family=family,
        alpha=alpha,
        lam=lam,
        h=h,
        max_degree=max_degree,
        orders=tuple(orders) if orders else None,
        precision=precision,
        tolerance=tolerance.as_fraction() if tolerance is not None else None,
    )
    try:
        reports = [run_suite(name, cfg) for name in selected]
    except FracPolyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        rows = [
            [r.identity, r.comparisons, f"{r.max_abs_err:.3e}", f"{r.max_rel_err:.3e}",
             f"{r.tolerance:.3e}", r.verdict]
            for r in reports
        ]
        _emit_table(
            ["identity", "comparisons", "max_abs_err", "max_rel_err", "tolerance", "verdict"],
            rows,
            fmt,
        )
    bad = [r for r in reports if r.verdict == "fail"]
    if bad:
        click.echo(f"{len(bad)} suite(s) failed: {', '.join(r.identity for r in bad)}", err=True)
        sys.exit(1)


def main():
    cli(prog_name="fracpoly")


if __name__ == "__main__":
    main()
