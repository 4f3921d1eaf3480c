"""Named verification suites driven by ``meixner-sobolev verify``.

Each suite returns a list of :class:`Check` records.  Exact checks carry
``tolerance = 0`` and a measured value of 0 when they hold.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from . import genfun, hypergeom, laguerre, meixner, sobolev
from .errors import ParameterError
from .meixner import MeixnerParams
from .poly_core import format_rational, forward_difference
from .sobolev import SobolevParams

DPS_ENV = "MEIXNER_SOBOLEV_DPS"
DEFAULT_DPS = 30

SOBOLEV_GRID = (
    SobolevParams(2, Fraction(1, 2), 1),
    SobolevParams(1, Fraction(1, 2), 1),
    SobolevParams(3, Fraction(1, 3), 2),
    SobolevParams(Fraction(5, 2), Fraction(2, 3), Fraction(1, 10)),
)
GENERAL_BETA_GRID = tuple(Fraction(b) for b in ("-1/2", "0", "1", "2", "7/3"))
C_GRID = tuple(Fraction(c) for c in ("1/3", "1/2", "3/4"))
# c = 1/2, lambda = 3/2 makes the limit a = 1/2 rational
RATIONAL_A_LAMBDA = Fraction(3, 2)


def working_dps() -> int:
    raw = os.environ.get(DPS_ENV)
    if raw is None:
        return DEFAULT_DPS
    dps = int(raw)
    if dps < 16:
        raise ValueError(f"{DPS_ENV} must be at least 16, got {dps}")
    return dps


@dataclass
class Check:
    suite: str
    name: str
    identity: str
    passed: bool
    measured: float | None
    tolerance: float | None
    params: dict = field(default_factory=dict)
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def _pstr(p) -> dict:
    return {k: format_rational(v) for k, v in vars(p).items()}


def _exact(suite, name, identity, ok: bool, params=None, detail="") -> Check:
    return Check(suite, name, identity, bool(ok), 0.0 if ok else None, 0.0, params or {}, detail)


def _tol(suite, name, identity, measured, tol, params=None, detail="") -> Check:
    measured = float(measured)
    return Check(suite, name, identity, measured <= tol, measured, tol, params or {}, detail)


@dataclass
class SuiteConfig:
    sobolev_params: Sequence[SobolevParams] | None = None
    laguerre_params: Sequence[laguerre.LaguerreSobolevParams] | None = None
    max_n: int | None = None
    seed: int = 0
    dps: int = DEFAULT_DPS


# -- suites --------------------------------------------------------------------


def suite_orthogonality(cfg: SuiteConfig) -> list[Check]:
    s = "orthogonality"
    grid = cfg.sobolev_params or SOBOLEV_GRID
    N = cfg.max_n if cfg.max_n is not None else 12
    out = []
    for p in grid:
        mp = p.meixner
        fam = meixner.meixner_family(N, mp)
        off = [meixner.pascal_inner(fam[i], fam[j], mp) for j in range(N + 1) for i in range(j)]
        diag = [meixner.pascal_inner(fam[i], fam[i], mp) == meixner.meixner_norm(i, mp) for i in range(N + 1)]
        out.append(_exact(s, "meixner_orthogonal", "Meixner orthogonality", all(v == 0 for v in off), _pstr(mp)))
        out.append(_exact(s, "meixner_norms", "Meixner squared norms", all(diag), _pstr(mp)))

        S = sobolev.sobolev_family(N, p)
        off = [sobolev.sobolev_inner(S[i], S[j], p) for j in range(N + 1) for i in range(j)]
        out.append(_exact(s, "sobolev_orthogonal", "Sobolev orthogonality", all(v == 0 for v in off), _pstr(p)))
        gs = sobolev.gram_schmidt_family(N, p)
        out.append(_exact(s, "gram_schmidt_match", "telescoped sum vs Gram-Schmidt", gs == S, _pstr(p)))
    return out


def suite_recurrences(cfg: SuiteConfig) -> list[Check]:
    s = "recurrences"
    out = []
    n_meixner = cfg.max_n if cfg.max_n is not None else 25
    for beta in GENERAL_BETA_GRID:
        for c in C_GRID:
            mp = MeixnerParams(beta, c)
            rec = meixner.meixner_family(n_meixner, mp)
            lower = meixner.meixner_family(n_meixner, MeixnerParams(beta - 1, c))
            explicit_ok = all(meixner.meixner_poly(n, mp) == rec[n] for n in range(n_meixner + 1))
            shift_ok = all(rec[n] - rec[n - 1] == lower[n] for n in range(1, n_meixner + 1))
            diff_ok = all(
                forward_difference(rec[n] - rec[n - 1]) == rec[n - 1] * ((c - 1) / c)
                for n in range(1, n_meixner + 1)
            )
            out.append(_exact(s, "explicit_vs_recurrence", "Meixner explicit sum vs recurrence", explicit_ok, _pstr(mp)))
            out.append(_exact(s, "shift_relation", "m_n - m_{n-1} = m_n(beta-1)", shift_ok, _pstr(mp)))
            out.append(_exact(s, "difference_relation", "forward difference of m_n - m_{n-1}", diff_ok, _pstr(mp)))

    n_sob = cfg.max_n if cfg.max_n is not None else 20
    for p in cfg.sobolev_params or SOBOLEV_GRID:
        tele = all(sobolev.telescoping_check(n, p) for n in range(1, n_sob + 1))
        prop = all(genfun.cumulative_sum_checks(n_sob, p))
        out.append(_exact(s, "telescoping", "classical-to-Sobolev telescoping", tele, _pstr(p)))
        out.append(_exact(s, "series_reduction", "q_n S_n as cumulative Meixner sum", prop, _pstr(p)))

        a = sobolev.a_sequence(40, p)
        q_rec = sobolev.q_sequence(30, p)
        q_rat = sobolev.q_from_ratios(a[:31])
        out.append(_exact(s, "q_recurrence_vs_ratio", "q_n recurrence vs 1/a_n products", q_rec == q_rat, _pstr(p)))
        out.append(_exact(s, "a_bounds", "0 < a_n <= 1", all(0 < v <= 1 for v in a), _pstr(p)))
        qp = sobolev.q_polynomials(30, p)
        deg_ok = all(qp[n].degree == n - 1 for n in range(1, 31)) and all(v(Fraction(1)) == 1 for v in qp)
        out.append(_exact(s, "q_eta_degree", "deg_eta q_n = n-1 and q_n(1) = 1", deg_ok, _pstr(p)))
        lim = sobolev.a_limit(p)
        c = float(p.c)
        resid = abs(c * lim * lim - (1 + float(p.eta) * c) * lim + 1)
        out.append(_tol(s, "a_limit_quadratic", "limit a solves its quadratic", resid, 1e-14, _pstr(p)))
        if p.beta == 1 and p.c == Fraction(1, 2):
            out.append(_tol(s, "a40_vs_limit", "a_n converges to a", abs(float(a[40]) - lim), 1e-10, _pstr(p)))
        elif p.beta != 1:
            # the (beta-1)/(n+beta-1) term makes the approach O(1/n): doubling n halves the gap
            a80 = sobolev.a_sequence(80, p)[80]
            ratio = (float(a80) - lim) / (float(a[40]) - lim)
            out.append(_tol(s, "a_n_algebraic_rate", "a_n - a halves when n doubles", abs(ratio - 0.5), 0.05, _pstr(p)))

    degenerate = [SobolevParams(p.beta, p.c, 0) for p in cfg.sobolev_params or SOBOLEV_GRID]
    for p in degenerate:
        ok = all(v == 1 for v in sobolev.a_sequence(30, p)) and all(v == 1 for v in sobolev.q_sequence(30, p))
        ok = ok and sobolev.a_limit(p) == 1.0
        ok = ok and all(
            sobolev.sobolev_poly(n, p) == meixner.meixner_poly_recurrence(n, p.meixner) for n in range(11)
        )
        out.append(_exact(s, "lambda_zero", "lambda = 0 reproduces the classical family", ok, _pstr(p)))
    return out


def _gf_grid(p: SobolevParams):
    ac = genfun.gf_constants(p).a * float(p.c)
    return [-0.05, 0.05, 0.1, 0.25 * ac], [0, 1, 2, 5]


def _stream_check(s, p: SobolevParams, x, N: int, dps: int) -> Check:
    target = genfun.qs_coefficients(x, p, N)
    try:
        genfun.exact_gf_constants(p)
        exact = True
    except ParameterError:
        exact = False
    coeffs = genfun.gm_taylor_coefficients(x, p, N, exact=exact, dps=dps)
    params = {**_pstr(p), "x": str(x)}
    if exact:
        return _exact(s, "taylor_stream_exact", "closed-form Taylor coefficients = q_n S_n(x)", coeffs == target, params)
    with mpmath.workdps(dps):
        gap = max(
            abs(u - hypergeom.to_mpf(v)) / max(1, abs(hypergeom.to_mpf(v))) for u, v in zip(coeffs, target)
        )
    return _tol(s, "taylor_stream_mp", "closed-form Taylor coefficients = q_n S_n(x)", gap, 10.0 ** (-(dps - 8)), params)


def _gm_checks(s, grid, cfg) -> list[Check]:
    out = []
    for p in grid:
        omegas, xs = _gf_grid(p)
        worst = 0.0
        for w in omegas:
            for x in xs:
                worst = max(worst, genfun.gm_compare(x, w, p, N=80).abs_gap)
        out.append(_tol(s, "closed_vs_truncated", "G_M closed form vs truncated series", worst, 1e-9, _pstr(p)))
        k = genfun.gf_constants(p)
        out.append(_tol(s, "gamma_plus_delta", "gamma + delta = 1", abs(k.gamma + k.delta - 1), 1e-13, _pstr(p)))
        deg = SobolevParams(p.beta, p.c, 0)
        mp = deg.meixner
        worst = max(
            abs(genfun.gm_closed(x, w, deg) - genfun.meixner_gf_closed(x, w, mp)) for w in omegas for x in xs
        )
        out.append(_tol(s, "lambda_zero", "lambda = 0 gives the Meixner generating function", worst, 1e-12, _pstr(p)))
        for x in (0, 3):
            out.append(_stream_check(s, p, x, 15, cfg.dps))
        rational = SobolevParams(p.beta, Fraction(1, 2), RATIONAL_A_LAMBDA)
        for x in (0, 2, 3) if p.beta != 1 else (0, Fraction(7, 3), 3):
            out.append(_stream_check(s, rational, x, 15, cfg.dps))
    return out


def suite_gf_beta1(cfg: SuiteConfig) -> list[Check]:
    s = "gf-beta1"
    grid = cfg.sobolev_params or (SobolevParams(1, Fraction(1, 2), 1),)
    for p in grid:
        if p.beta != 1:
            raise ParameterError("gf-beta1 needs beta = 1")
    out = _gm_checks(s, grid, cfg)
    for p in grid:
        if p.c == Fraction(1, 2) and p.lam == 1:
            k = genfun.gf_constants(p)
            gap = max(abs(k.gamma - 0.5), abs(k.delta - 0.5))
            out.append(_tol(s, "gamma_delta_half", "gamma = delta = 1/2", gap, 1e-13, _pstr(p)))
    return out


def suite_gf_general(cfg: SuiteConfig) -> list[Check]:
    s = "gf-general"
    grid = cfg.sobolev_params or (
        SobolevParams(2, Fraction(1, 2), 1),
        SobolevParams(Fraction(5, 2), Fraction(1, 2), 1),
    )
    for p in grid:
        if p.beta == 1:
            raise ParameterError("gf-general needs beta != 1")
    out = _gm_checks(s, grid, cfg)
    for p in grid:
        omegas, xs = _gf_grid(p)
        gap = 0.0
        for w in omegas:
            w1, w2 = genfun.omega_substitutions(w, p)
            gap = max(gap, abs((w2 - w1) / (1 + w2) - genfun.hyp_argument(w, p)))
            if not abs(w2) < 1:
                gap = float("inf")
        out.append(_tol(s, "argument_identity", "2F1 argument from the omega substitutions", gap, 1e-13, _pstr(p)))

    eps = Fraction(1, 10**6)
    base = SobolevParams(1, Fraction(1, 2), 1)
    worst = 0.0
    for w in _gf_grid(base)[0]:
        for x in (0, 1, 2, 5):
            ref = genfun.gm_closed_beta1(x, w, base)
            for b in (1 - eps, 1 + eps):
                worst = max(worst, abs(genfun.gm_closed_general(x, w, SobolevParams(b, base.c, base.lam)) - ref))
    out.append(_tol(s, "beta_to_one", "beta -> 1 continuity", worst, 1e-4, _pstr(base)))
    return out


def suite_F_coeffs(cfg: SuiteConfig) -> list[Check]:
    s = "F-coeffs"
    grid = cfg.sobolev_params or (
        SobolevParams(2, Fraction(1, 2), 1),
        SobolevParams(Fraction(5, 2), Fraction(1, 2), 1),
        SobolevParams(3, Fraction(1, 3), 2),
    )
    out = []
    N = 40
    for p in grid:
        if p.beta == 1:
            raise ParameterError("F-coeffs needs beta != 1")
        h, conv = genfun.F_coefficients(N, p, dps=cfg.dps)
        out.append(_exact(s, "h_recurrence_vs_q", "h_n recurrence vs q_n (beta-1)_n / n!", h == genfun.h_from_q(N, p), _pstr(p)))
        with mpmath.workdps(cfg.dps):
            gap = max(abs(u - hypergeom.to_mpf(v)) / abs(hypergeom.to_mpf(v)) for u, v in zip(conv, h) if v != 0)
        out.append(_tol(s, "h_vs_convolution", "F Taylor coefficients vs closed form", gap, 1e-10, _pstr(p)))
        out.append(_tol(s, "F_at_zero", "F(0) = 1", abs(genfun.F_closed(0.0, p) - 1), 0.0, _pstr(p)))
        deg = SobolevParams(p.beta, p.c, 0)
        coeffs = genfun.F_taylor_coefficients(N, deg, exact=True)
        expected = [hypergeom_binomial(p.beta - 1, n) for n in range(N + 1)]
        out.append(_exact(s, "lambda_zero", "lambda = 0 gives (1-w)^(1-beta)", coeffs == expected, _pstr(deg)))
    return out


def hypergeom_binomial(p, n: int) -> Fraction:
    """(p)_n / n!, the w^n coefficient of (1-w)^(-p)."""
    out = Fraction(1)
    for j in range(n):
        out = out * (p + j) / (j + 1)
    return out


def pfaff_kummer_grid(seed: int, size: int = 50):
    rng = random.Random(seed)
    pts = []
    while len(pts) < size:
        a = rng.uniform(-2.0, 2.0)
        b = rng.uniform(-2.0, 2.0)
        c0 = rng.uniform(0.5, 3.0)
        z = rng.uniform(-0.45, 0.45)
        pts.append((a, b, c0, z))
    return pts


def suite_hypergeom(cfg: SuiteConfig) -> list[Check]:
    s = "hypergeom-identities"
    out = []
    worst = 0.0
    for a, b, c0, z in pfaff_kummer_grid(cfg.seed):
        left, right = hypergeom.pfaff_kummer_check(a, b, c0, z)
        worst = max(worst, abs(left - right) / max(1.0, abs(left)))
    out.append(_tol(s, "pfaff_kummer_grid", "Pfaff-Kummer transformation", worst, 1e-12, {"seed": str(cfg.seed)}))
    for args in ((-3, 0.7, 1.9, 0.4), (0.5, 1.2, 2.3, -0.6)):
        left, right = hypergeom.pfaff_kummer_check(*args)
        out.append(_tol(s, "pfaff_kummer_point", "Pfaff-Kummer transformation", abs(left - right), 1e-12, {"args": str(args)}))

    for args, params in bilateral_constellations():
        left, right = hypergeom.bilateral_2f1_check(*args)
        out.append(_tol(s, "bilateral_constellation", "bilateral 2F1 summation", abs(left - right), 1e-10, params))
    # the two degenerations, at the first constellation's (a, b, c0)
    (a, b, c0, y, z), params = bilateral_constellations()[0]
    left, right = hypergeom.bilateral_2f1_check(a, b, c0, 0.0, z)
    out.append(_tol(s, "bilateral_y_zero", "bilateral summation at y = 0", abs(left - right), 1e-10, params))
    left, right = hypergeom.bilateral_2f1_check(a, b, c0, y, 0.0)
    out.append(_tol(s, "bilateral_z_zero", "bilateral summation at z = 0", abs(left - right), 1e-10, params))
    return out


def bilateral_constellations():
    """(a, b, c0, y, z) = (-x, (beta-1) delta, beta-1, -w1, w2/(1+w2)) with their labels."""
    out = []
    for p, x, w in ((SobolevParams(2, Fraction(1, 2), 1), 3, 0.05), (SobolevParams(Fraction(5, 2), Fraction(1, 2), 1), 2, 0.05)):
        k = genfun.gf_constants(p)
        w1, w2 = genfun.omega_substitutions(w, p)
        bm1 = float(p.beta - 1)
        out.append(((-x, bm1 * k.delta, bm1, -w1, w2 / (1 + w2)), {**_pstr(p), "x": str(x), "omega": str(w)}))
    return out


LAGUERRE_GRID = (
    laguerre.LaguerreSobolevParams(0, 1),
    laguerre.LaguerreSobolevParams(1, 1),
)


def suite_laguerre(cfg: SuiteConfig) -> list[Check]:
    s = "laguerre"
    out = []
    N = cfg.max_n if cfg.max_n is not None else 10
    for p in cfg.laguerre_params or LAGUERRE_GRID:
        fam = laguerre.laguerre_sobolev_family(N, p)
        ok = all(laguerre.laguerre_sobolev_inner(fam[i], fam[j], p) == 0 for j in range(N + 1) for i in range(j))
        out.append(_exact(s, "laguerre_sobolev_orthogonal", "Laguerre-Sobolev orthogonality", ok, _pstr(p)))
        L = laguerre.laguerre_family(N, p.alpha)
        ok = all(laguerre.laguerre_inner(L[i], L[j], p.alpha) == 0 for j in range(N + 1) for i in range(j))
        out.append(_exact(s, "laguerre_orthogonal", "Laguerre orthogonality", ok, _pstr(p)))
        at = p.a_tilde
        worst = 0.0
        for w in (-0.25 * at, 0.1 * at, 0.25 * at):
            for x in (0, 1, 2, 5):
                worst = max(worst, abs(laguerre.gl_closed(x, w, p) - laguerre.gl_truncated(x, w, p, 80)))
        out.append(_tol(s, "gl_closed_vs_truncated", "G_L closed form vs truncated series", worst, 1e-9, _pstr(p)))
    return out


def suite_limits(cfg: SuiteConfig) -> list[Check]:
    s = "limits"
    out = []
    cs = laguerre.dyadic_c_sequence(4, 12)
    n_max = cfg.max_n if cfg.max_n is not None else 6
    for p in cfg.laguerre_params or LAGUERRE_GRID:
        params = _pstr(p)
        for n in range(n_max + 1):
            e = laguerre.meixner_laguerre_limit_check(n, 1, p.alpha, cs)
            out.append(_exact(s, f"meixner_to_laguerre_n{n}", "Meixner -> Laguerre limit (monotone)", laguerre.is_monotone_decreasing(e), params, f"final={e[-1]:.3e}"))
            e = laguerre.sobolev_limit_check(n, 1, p, cs)
            ok = laguerre.is_monotone_decreasing(e)
            out.append(_exact(s, f"sobolev_to_laguerre_sobolev_n{n}", "Sobolev -> Laguerre-Sobolev limit (monotone)", ok, params, f"final={e[-1]:.3e}"))
            out.append(_tol(s, f"sobolev_limit_final_n{n}", "Sobolev -> Laguerre-Sobolev limit at k = 12", e[-1], 1e-2, params))
            e = laguerre.q_limit_check(n, p, cs)
            out.append(_exact(s, f"q_limit_n{n}", "q_n -> q_n^L (monotone)", laguerre.is_monotone_decreasing(e), params, f"final={e[-1]:.3e}"))
        e = laguerre.gf_limit_check(1, 0.1, p, cs)
        out.append(_exact(s, "gm_to_gl", "G_M -> G_L (monotone)", laguerre.is_monotone_decreasing(e), params, f"final={e[-1]:.3e}"))
        # n = 1 error is exactly (alpha + 1)(1 - c); x = 2
        for fn in (
            lambda: laguerre.meixner_laguerre_limit_check(1, 2, p.alpha, cs),
            lambda: laguerre.sobolev_limit_check(1, 2, p, cs),
        ):
            e = fn()
            gap = max(abs(v - float((p.alpha + 1) * (1 - c))) for v, c in zip(e, cs))
            out.append(_tol(s, "n1_linear_error", "n = 1 error equals (alpha+1)(1-c)", gap, 0.0, params))
        eta_ok = all(p.sobolev_at(c).eta == 1 + p.lambda_t / c**2 for c in cs)
        out.append(_exact(s, "eta_substitution", "eta = 1 + lambda_t / c^2", eta_ok, params))
    return out


SUITES: dict[str, Callable[[SuiteConfig], list[Check]]] = {
    "orthogonality": suite_orthogonality,
    "recurrences": suite_recurrences,
    "gf-beta1": suite_gf_beta1,
    "gf-general": suite_gf_general,
    "F-coeffs": suite_F_coeffs,
    "hypergeom-identities": suite_hypergeom,
    "laguerre": suite_laguerre,
    "limits": suite_limits,
}


def run_suites(names: Sequence[str], cfg: SuiteConfig) -> dict:
    if "all" in names:
        names = list(SUITES)
    report = {"command": "verify", "suites": [], "passed": True}
    for name in names:
        t0 = time.perf_counter()
        checks = SUITES[name](cfg)
        elapsed = time.perf_counter() - t0
        ok = all(c.passed for c in checks)
        report["suites"].append(
            {"suite": name, "passed": ok, "seconds": round(elapsed, 3), "checks": [c.to_dict() for c in checks]}
        )
        report["passed"] = report["passed"] and ok
    return report
