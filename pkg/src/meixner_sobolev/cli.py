"""Command-line entry point ``meixner-sobolev``.

    meixner-sobolev eval --family sobolev --beta 2 --c 1/2 --lambda 1 --n 2 --x 0
    meixner-sobolev eval --gf gm --beta 1 --c 1/2 --lambda 1 --x 3 --omega 0.1
    meixner-sobolev coeffs --beta 2 --c 1/2 --lambda 1 --N 5
    meixner-sobolev verify --suite all
    meixner-sobolev table --gf gm --beta 2 --c 1/2 --lambda 1
    meixner-sobolev limit-sweep --alpha 1 --lambda-t 1 --n 1 --x 2

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

import click

from . import genfun, laguerre, meixner, sobolev, suites
from .errors import ConvergenceError, ParameterError, PoleError, RegionError
from .meixner import MeixnerParams
from .poly_core import format_rational, parse_rational
from .sobolev import SobolevParams

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

CONFIG_ERRORS = (ParameterError, RegionError, PoleError, ConvergenceError, ValueError)


class RationalType(click.ParamType):
    """Strict ``p/q`` or integer; no decimals for exact parameters."""

    name = "p/q"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            self.fail(str(exc), param, ctx)


class RealType(click.ParamType):
    """``p/q`` or a decimal literal, kept exact as a Fraction."""

    name = "real"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError:
            pass
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"expected a decimal or p/q number, got {value!r}", param, ctx)


def output_schema() -> dict:
    """The JSON schema every ``--format json`` payload validates against."""
    text = resources.files(__package__).joinpath("schemas/output.schema.json").read_text()
    return json.loads(text)


RATIONAL = RationalType()
REAL = RealType()


def fmt_real(v) -> str:
    # shortest round-trip decimal
    return repr(float(v))


def emit(ctx: click.Context, text: str) -> None:
    out = ctx.obj.get("out")
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def emit_csv(ctx, header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    emit(ctx, buf.getvalue())


def emit_json(ctx, payload: dict) -> None:
    emit(ctx, json.dumps(payload, indent=2) + "\n")


def config_error(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_CONFIG)


def common_output(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")(fn)
    return fn


def _params(**kw) -> dict:
    names = {"lam": "lambda"}
    return {names.get(k, k): format_rational(v) for k, v in kw.items() if v is not None}


def _sobolev(beta, c, lam) -> SobolevParams:
    missing = [n for n, v in (("--beta", beta), ("--c", c), ("--lambda", lam)) if v is None]
    if missing:
        raise ParameterError(f"missing {', '.join(missing)}")
    return SobolevParams(beta, c, lam)


def _laguerre(alpha, lambda_t) -> laguerre.LaguerreSobolevParams:
    missing = [n for n, v in (("--alpha", alpha), ("--lambda-t", lambda_t)) if v is None]
    if missing:
        raise ParameterError(f"missing {', '.join(missing)}")
    return laguerre.LaguerreSobolevParams(alpha, lambda_t)


@click.group()
@click.version_option(package_name="artifact")
@click.pass_context
def main(ctx):
    """Meixner and Delta-Meixner-Sobolev polynomials: evaluation and verification."""
    ctx.ensure_object(dict)


# -- eval ----------------------------------------------------------------------


FAMILIES = ("meixner", "sobolev", "laguerre", "laguerre-sobolev")
GFS = ("meixner", "gm", "gl")


@main.command("eval")
@click.option("--family", type=click.Choice(FAMILIES), default=None)
@click.option("--gf", type=click.Choice(GFS), default=None)
@click.option("--beta", type=RATIONAL)
@click.option("--c", "c", type=RATIONAL)
@click.option("--lambda", "lam", type=RATIONAL)
@click.option("--alpha", type=RATIONAL)
@click.option("--lambda-t", "lambda_t", type=RATIONAL)
@click.option("--n", "n", type=click.IntRange(min=0))
@click.option("--x", "x", type=REAL)
@click.option("--omega", type=REAL)
@click.option("--N", "N", type=click.IntRange(min=0), default=80, show_default=True, help="Truncation order for series.")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Allowed |closed - truncated| gap.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text", show_default=True)
@common_output
@click.pass_context
def eval_cmd(ctx, family, gf, beta, c, lam, alpha, lambda_t, n, x, omega, N, tol, fmt, out):
    """Evaluate one polynomial at x, or a generating function at (x, omega)."""
    ctx.obj["out"] = out
    if (family is None) == (gf is None):
        config_error("give exactly one of --family or --gf")
    if not tol > 0:
        config_error("--tol must be positive")
    if x is None:
        config_error("--x is required")
    try:
        if family is not None:
            if n is None:
                raise ParameterError("--n is required with --family")
            value, params = _eval_family(family, n, x, beta, c, lam, alpha, lambda_t)
            payload = {"command": "eval", "family": family, "params": params, "n": n, "x": format_rational(x), "value": format_rational(value)}
            if fmt == "json":
                emit_json(ctx, payload)
            elif fmt == "csv":
                emit_csv(ctx, ["family", "n", "x", "value"], [[family, n, payload["x"], payload["value"]]])
            else:
                emit(ctx, payload["value"] + "\n")
            return
        if omega is None:
            raise ParameterError("--omega is required with --gf")
        cmp, params = _eval_gf(gf, x, omega, N, beta, c, lam, alpha, lambda_t)
    except CONFIG_ERRORS as exc:
        config_error(str(exc))

    ok = cmp.abs_gap <= tol
    payload = {
        "command": "eval",
        "gf": gf,
        "params": params,
        "x": format_rational(x),
        "omega": format_rational(omega),
        "N": N,
        "closed": cmp.closed,
        "truncated": cmp.truncated,
        "abs_gap": cmp.abs_gap,
        "rel_gap": cmp.rel_gap,
        "tolerance": tol,
        "passed": ok,
    }
    if fmt == "json":
        emit_json(ctx, payload)
    elif fmt == "csv":
        emit_csv(
            ctx,
            ["gf", "x", "omega", "N", "closed", "truncated", "abs_gap", "rel_gap", "passed"],
            [[gf, payload["x"], payload["omega"], N, fmt_real(cmp.closed), fmt_real(cmp.truncated), fmt_real(cmp.abs_gap), fmt_real(cmp.rel_gap), ok]],
        )
    else:
        emit(ctx, f"closed={fmt_real(cmp.closed)} truncated={fmt_real(cmp.truncated)} gap={fmt_real(cmp.abs_gap)}\n")
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


def _eval_family(family, n, x, beta, c, lam, alpha, lambda_t):
    if family == "meixner":
        if beta is None or c is None:
            raise ParameterError("meixner needs --beta and --c")
        p = MeixnerParams(beta, c)
        return meixner.meixner_family(n, p)[n](x), _params(beta=beta, c=c)
    if family == "sobolev":
        p = _sobolev(beta, c, lam)
        return sobolev.sobolev_poly(n, p)(x), _params(beta=beta, c=c, lam=lam)
    if family == "laguerre":
        if alpha is None:
            raise ParameterError("laguerre needs --alpha")
        return laguerre.laguerre_poly(n, alpha)(x), _params(alpha=alpha)
    p = _laguerre(alpha, lambda_t)
    return laguerre.laguerre_sobolev_poly(n, p)(x), _params(alpha=alpha, lambda_t=lambda_t)


def _eval_gf(gf, x, omega, N, beta, c, lam, alpha, lambda_t):
    w = float(omega)
    if gf == "meixner":
        if beta is None or c is None:
            raise ParameterError("the Meixner generating function needs --beta and --c")
        p = MeixnerParams(beta, c)
        p.require_measure()
        return genfun.meixner_gf_compare(x, w, p, N), _params(beta=beta, c=c)
    if gf == "gm":
        p = _sobolev(beta, c, lam)
        return genfun.gm_compare(x, w, p, N), _params(beta=beta, c=c, lam=lam)
    p = _laguerre(alpha, lambda_t)
    closed = laguerre.gl_closed(x, w, p)
    return genfun.SeriesComparison.build(closed, laguerre.gl_truncated(x, w, p, N), N), _params(alpha=alpha, lambda_t=lambda_t)


# -- coeffs --------------------------------------------------------------------


@main.command("coeffs")
@click.option("--beta", type=RATIONAL, required=True)
@click.option("--c", "c", type=RATIONAL, required=True)
@click.option("--lambda", "lam", type=RATIONAL, required=True)
@click.option("--N", "N", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--table", "table", type=click.Choice(["sequences", "constants", "sobolev"]), default="sequences", show_default=True, help="Which table to print in CSV mode.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@common_output
@click.pass_context
def coeffs_cmd(ctx, beta, c, lam, N, table, fmt, out):
    """a_n, q_n, the limit constants and the coefficients of S_n up to N."""
    ctx.obj["out"] = out
    try:
        p = SobolevParams(beta, c, lam)
        tables = sobolev.coefficient_tables(N, p)
        k = genfun.gf_constants(p)
        fam = sobolev.sobolev_family(N, p)
    except CONFIG_ERRORS as exc:
        config_error(str(exc))
    constants = {"a_limit": float(k.a), "gamma": float(k.gamma), "delta": float(k.delta)}
    try:
        exact = genfun.exact_gf_constants(p)
        constants["exact"] = {"a_limit": format_rational(exact.a), "gamma": format_rational(exact.gamma), "delta": format_rational(exact.delta)}
    except ParameterError:
        pass

    if fmt == "json":
        emit_json(
            ctx,
            {
                "command": "coeffs",
                "params": _params(beta=beta, c=c, lam=lam),
                "N": N,
                "sequences": [
                    {"n": n, "a_n": format_rational(tables.a[n]), "q_n": format_rational(tables.q[n])} for n in range(N + 1)
                ],
                "constants": constants,
                "sobolev": [{"n": n, "coeffs": [format_rational(v) for v in fam[n].coeffs]} for n in range(N + 1)],
            },
        )
    elif table == "sequences":
        emit_csv(ctx, ["n", "a_n", "q_n"], [[n, format_rational(tables.a[n]), format_rational(tables.q[n])] for n in range(N + 1)])
    elif table == "constants":
        emit_csv(ctx, ["name", "value"], [[name, fmt_real(v)] for name, v in constants.items() if name != "exact"])
    else:
        rows = [[n, j, format_rational(v)] for n in range(N + 1) for j, v in enumerate(fam[n].coeffs)]
        emit_csv(ctx, ["n", "power", "coeff"], rows)


# -- verify --------------------------------------------------------------------


SUITE_CHOICES = tuple(suites.SUITES) + ("all",)


@main.command("verify")
@click.option("--suite", "suite_names", type=click.Choice(SUITE_CHOICES), multiple=True, default=("all",), show_default=True)
@click.option("--beta", type=RATIONAL, help="Restrict the Sobolev grid to one parameter set.")
@click.option("--c", "c", type=RATIONAL)
@click.option("--lambda", "lam", type=RATIONAL)
@click.option("--alpha", type=RATIONAL, help="Restrict the Laguerre grid to one parameter set.")
@click.option("--lambda-t", "lambda_t", type=RATIONAL)
@click.option("--max-n", type=click.IntRange(min=0), default=None, help="Override each suite's degree bound.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="json", show_default=True)
@common_output
@click.pass_context
def verify_cmd(ctx, suite_names, beta, c, lam, alpha, lambda_t, max_n, seed, fmt, out):
    """Run verification suites; exit 1 if any check fails."""
    ctx.obj["out"] = out
    try:
        dps = suites.working_dps()
        cfg = suites.SuiteConfig(max_n=max_n, seed=seed, dps=dps)
        if any(v is not None for v in (beta, c, lam)):
            base = suites.SOBOLEV_GRID[0]
            cfg.sobolev_params = [
                SobolevParams(
                    base.beta if beta is None else beta,
                    base.c if c is None else c,
                    base.lam if lam is None else lam,
                )
            ]
        if any(v is not None for v in (alpha, lambda_t)):
            base = suites.LAGUERRE_GRID[0]
            cfg.laguerre_params = [
                laguerre.LaguerreSobolevParams(base.alpha if alpha is None else alpha, base.lambda_t if lambda_t is None else lambda_t)
            ]
        report = suites.run_suites(list(suite_names), cfg)
    except CONFIG_ERRORS as exc:
        config_error(str(exc))
    report["seed"] = seed
    report["dps"] = dps
    if fmt == "json":
        emit_json(ctx, report)
    else:
        rows = [
            [
                ch["suite"],
                ch["name"],
                ch["identity"],
                ch["passed"],
                "" if ch["measured"] is None else fmt_real(ch["measured"]),
                "" if ch["tolerance"] is None else fmt_real(ch["tolerance"]),
                ";".join(f"{k}={v}" for k, v in ch["params"].items()),
            ]
            for s in report["suites"]
            for ch in s["checks"]
        ]
        emit_csv(ctx, ["suite", "check", "identity", "passed", "measured", "tolerance", "params"], rows)
    sys.exit(EXIT_OK if report["passed"] else EXIT_FAIL)


# -- table ---------------------------------------------------------------------


@main.command("table")
@click.option("--gf", type=click.Choice(["gm", "gl"]), default="gm", show_default=True)
@click.option("--beta", type=RATIONAL)
@click.option("--c", "c", type=RATIONAL)
@click.option("--lambda", "lam", type=RATIONAL)
@click.option("--alpha", type=RATIONAL)
@click.option("--lambda-t", "lambda_t", type=RATIONAL)
@click.option("--x", "xs", type=REAL, multiple=True, help="Repeatable; default 0 1 2 5.")
@click.option("--omega", "omegas", type=REAL, multiple=True, help="Repeatable; default -0.05 0.05 0.1 and a quarter of the radius.")
@click.option("--N", "N", type=click.IntRange(min=0), default=80, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@common_output
@click.pass_context
def table_cmd(ctx, gf, beta, c, lam, alpha, lambda_t, xs, omegas, N, tol, fmt, out):
    """Closed form against truncated series over an (x, omega) grid."""
    ctx.obj["out"] = out
    xs = xs or tuple(Fraction(v) for v in (0, 1, 2, 5))
    rows = []
    try:
        if gf == "gm":
            p = _sobolev(beta, c, lam)
            params = _params(beta=beta, c=c, lam=lam)
            radius = float(genfun.gf_constants(p).a) * float(p.c)

            def compare(x, w):
                return genfun.gm_compare(x, w, p, N)
        else:
            p = _laguerre(alpha, lambda_t)
            params = _params(alpha=alpha, lambda_t=lambda_t)
            radius = p.a_tilde

            def compare(x, w):
                return genfun.SeriesComparison.build(laguerre.gl_closed(x, w, p), laguerre.gl_truncated(x, w, p, N), N)

        ws = [float(w) for w in omegas] or [-0.05, 0.05, 0.1, 0.25 * radius]
        for x in xs:
            for w in ws:
                rows.append((x, w, compare(x, w)))
    except CONFIG_ERRORS as exc:
        config_error(str(exc))

    ok = all(r[2].abs_gap <= tol for r in rows)
    if fmt == "json":
        emit_json(
            ctx,
            {
                "command": "table",
                "gf": gf,
                "params": params,
                "N": N,
                "tolerance": tol,
                "passed": ok,
                "rows": [
                    {"x": format_rational(x), "omega": w, "closed": r.closed, "truncated": r.truncated, "abs_gap": r.abs_gap, "rel_gap": r.rel_gap}
                    for x, w, r in rows
                ],
            },
        )
    else:
        emit_csv(
            ctx,
            ["x", "omega", "closed", "truncated", "abs_gap", "rel_gap"],
            [[format_rational(x), fmt_real(w), fmt_real(r.closed), fmt_real(r.truncated), fmt_real(r.abs_gap), fmt_real(r.rel_gap)] for x, w, r in rows],
        )
    sys.exit(EXIT_OK if ok else EXIT_FAIL)


# -- limit-sweep ---------------------------------------------------------------


SERIES = ("meixner-laguerre", "sobolev", "q", "gf")


def sweep(series: str, n: int, x, omega, p: laguerre.LaguerreSobolevParams, cs, dps: int | None) -> list[float]:
    if series == "meixner-laguerre":
        return laguerre.meixner_laguerre_limit_check(n, x, p.alpha, cs)
    if series == "sobolev":
        return laguerre.sobolev_limit_check(n, x, p, cs)
    if series == "q":
        return laguerre.q_limit_check(n, p, cs)
    return laguerre.gf_limit_check(x, omega, p, cs, dps=dps)


@main.command("limit-sweep")
@click.option("--alpha", type=RATIONAL, required=True)
@click.option("--lambda-t", "lambda_t", type=RATIONAL, required=True)
@click.option("--n", "n", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--x", "x", type=REAL, default="1", show_default=True)
@click.option("--omega", type=REAL, default="1/10", show_default=True)
@click.option("--k-min", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--k-max", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--series", "series_names", type=click.Choice(SERIES + ("all",)), multiple=True, default=("all",), show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@common_output
@click.pass_context
def limit_sweep_cmd(ctx, alpha, lambda_t, n, x, omega, k_min, k_max, series_names, fmt, out):
    """Errors of the c -> 1 limits along c = 1 - 2^-k."""
    ctx.obj["out"] = out
    if k_min > k_max:
        config_error("--k-min exceeds --k-max")
    names = SERIES if "all" in series_names else tuple(dict.fromkeys(series_names))
    try:
        p = laguerre.LaguerreSobolevParams(alpha, lambda_t)
        dps = suites.working_dps()
        ks = list(range(k_min, k_max + 1))
        cs = laguerre.dyadic_c_sequence(k_min, k_max)
        results = [(name, sweep(name, n, x, omega, p, cs, dps)) for name in names]
    except CONFIG_ERRORS as exc:
        config_error(str(exc))

    if fmt == "json":
        emit_json(
            ctx,
            {
                "command": "limit-sweep",
                "params": _params(alpha=alpha, lambda_t=lambda_t),
                "n": n,
                "x": format_rational(x),
                "omega": format_rational(omega),
                "series": [
                    {
                        "name": name,
                        "monotone": laguerre.is_monotone_decreasing(errs),
                        "rows": [{"k": k, "c": format_rational(c), "error": e} for k, c, e in zip(ks, cs, errs)],
                    }
                    for name, errs in results
                ],
            },
        )
    else:
        rows = []
        for name, errs in results:
            mono = laguerre.is_monotone_decreasing(errs)
            rows += [[name, n, k, format_rational(c), fmt_real(e), mono] for k, c, e in zip(ks, cs, errs)]
        emit_csv(ctx, ["series", "n", "k", "c", "error", "monotone"], rows)


if __name__ == "__main__":
    main()
