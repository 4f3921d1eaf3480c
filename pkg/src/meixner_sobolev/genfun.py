"""Generating functions for Meixner and Δ-Meixner–Sobolev polynomials.

    G_M(x, w) = sum_n q_n S_n(x) w^n

has a closed form for |w| < a c in terms of the limit a of the a_n sequence
and the two weights gamma, delta (gamma + delta = 1).  For beta = 1 it is a
combination of two Meixner-type generating functions; for beta != 1 an
extra terminating 2F1 in x appears, so x is restricted to nonnegative
integers there.

Value-level routines take ``dps``: ``None`` evaluates in double precision,
an integer switches to mpmath with that many significant digits.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import taylor
from .errors import ParameterError, RegionError
from .hypergeom import binom_pow, hyp2f1_terminating, sqrt, to_mpf
from .meixner import MeixnerParams, meixner_family, meixner_poly
from .poly_core import as_exact, exact_sqrt, pochhammer
from .sobolev import SobolevParams, gram_schmidt_family, q_sequence, sobolev_family


@dataclass(frozen=True)
class GFConstants:
    a: object
    gamma: object
    delta: object


@dataclass(frozen=True)
class SeriesComparison:
    closed: float
    truncated: float
    N: int
    abs_gap: float
    rel_gap: float

    @classmethod
    def build(cls, closed, truncated, N):
        closed, truncated = float(closed), float(truncated)
        gap = abs(closed - truncated)
        rel = gap / abs(closed) if closed != 0 else gap
        return cls(closed, truncated, N, gap, rel)


@contextmanager
def _numeric(dps):
    if dps is None:
        yield float
    else:
        with mpmath.workdps(dps):
            yield to_mpf


def _constants_from_a(a, c):
    denom = 1 - a * a * c
    return GFConstants(a, (a - a * a * c) / denom, (1 - a) / denom)


def gf_constants(p: SobolevParams, dps: int | None = None) -> GFConstants:
    """a, gamma, delta for the given parameters.

    With ``dps`` set the values are mpmath numbers; the caller must keep an
    adequate ``mpmath.workdps`` active while using them.
    """
    if dps is not None:
        with mpmath.workdps(dps):
            return _mp_constants(p)
    c, eta = float(p.c), float(p.eta)
    b = 1 + eta * c
    # cancellation-free form of (b - sqrt(b^2 - 4c)) / (2c)
    a = 2 / (b + sqrt(b * b - 4 * c))
    return _constants_from_a(a, c)


def exact_gf_constants(p: SobolevParams) -> GFConstants:
    """Rational a, gamma, delta when the discriminant is a rational square."""
    b = 1 + p.eta * p.c
    root = exact_sqrt(b * b - 4 * p.c)
    if root is None:
        raise ParameterError(f"a is irrational for {p}")
    return _constants_from_a((b - root) / (2 * p.c), p.c)


def _mp_constants(p: SobolevParams) -> GFConstants:
    # assumes an active workdps context
    c, eta = to_mpf(p.c), to_mpf(p.eta)
    b = 1 + eta * c
    return _constants_from_a(2 / (b + mpmath.sqrt(b * b - 4 * c)), c)


def _constants(p: SobolevParams, dps):
    return gf_constants(p) if dps is None else _mp_constants(p)


# -- classical Meixner ---------------------------------------------------------


def meixner_gf_closed(x, omega, p: MeixnerParams):
    """(1 - w/c)^x (1 - w)^(-x - beta) for |w| < c < 1."""
    c = float(p.c)
    if not 0 < c < 1 or not abs(omega) < c:
        raise RegionError(f"Meixner generating function needs |w| < c < 1 (w={omega}, c={c})")
    x, omega, beta = float(x), float(omega), float(p.beta)
    return (1 - omega / c) ** x * (1 - omega) ** (-x - beta)


def meixner_gf_truncated(x, omega, p: MeixnerParams, N: int = 80) -> float:
    xe = as_exact(x)
    fam = meixner_family(N, p)
    return sum(float(fam[n](xe)) * omega**n for n in range(N + 1))


def meixner_gf_compare(x, omega, p: MeixnerParams, N: int = 80) -> SeriesComparison:
    return SeriesComparison.build(meixner_gf_closed(x, omega, p), meixner_gf_truncated(x, omega, p, N), N)


# -- Sobolev generating function -----------------------------------------------


def gm_truncated(x, omega, p: SobolevParams, N: int = 80) -> float:
    """sum_{n<=N} q_n S_n(x) w^n with q_n S_n(x) computed exactly."""
    xe = as_exact(x)
    q = q_sequence(N, p)
    S = sobolev_family(N, p)
    return sum(float(q[n] * S[n](xe)) * omega**n for n in range(N + 1))


def _check_gm_region(omega, a, c):
    if not abs(omega) < a * c:
        raise RegionError(f"G_M needs |w| < a c = {float(a * c)}, got w={omega}")


def gm_closed_beta1(x, omega, p: SobolevParams, dps: int | None = None):
    if p.beta != 1:
        raise ParameterError("the two-term closed form needs beta = 1")
    with _numeric(dps) as num:
        k = _constants(p, dps)
        a, g, d = k.a, k.gamma, k.delta
        c, x, w = num(p.c), num(x), num(omega)
        _check_gm_region(w, a, c)
        # paired as ratios so large x does not overflow the separate powers
        first = g * ((1 - w / (a * c)) / (1 - w / a)) ** x
        second = d * ((1 - w * a) / (1 - w * c * a)) ** x
        value = (first + second) / (1 - w)
        return value if dps is None else +value


def _integer_x(x) -> int:
    if x < 0 or x != int(x):
        raise ParameterError(f"the 2F1 closed form needs a nonnegative integer x, got {x}")
    return int(x)


def gm_closed_general(x, omega, p: SobolevParams, dps: int | None = None):
    if p.beta == 1:
        raise ParameterError("beta = 1 has its own closed form (gm_closed_beta1)")
    xi = _integer_x(x)
    with _numeric(dps) as num:
        k = _constants(p, dps)
        a, g, d = k.a, k.gamma, k.delta
        c, w, bm1 = num(p.c), num(omega), num(p.beta - 1)
        _check_gm_region(w, a, c)
        z = w * (c - 1) * (1 - a * a * c) / ((1 - c * a * w) * (a * c - w))
        value = (
            binom_pow(c * a * w, bm1 * d)
            * binom_pow(w / a, bm1 * g)
            * ((1 - w / (a * c)) / (1 - w / a)) ** xi
            * hyp2f1_terminating(xi, bm1 * d, bm1, z)
            / (1 - w)
        )
        return value if dps is None else +value


def gm_closed(x, omega, p: SobolevParams, dps: int | None = None):
    if p.beta == 1:
        return gm_closed_beta1(x, omega, p, dps)
    return gm_closed_general(x, omega, p, dps)


def gm_compare(x, omega, p: SobolevParams, N: int = 80) -> SeriesComparison:
    return SeriesComparison.build(gm_closed(x, omega, p), gm_truncated(x, omega, p, N), N)


def omega_substitutions(omega, p: SobolevParams, dps: int | None = None):
    """(w1, w2) = ((c-1) a w / (1 - c a w), (c-1) w / (c (a - w)))."""
    with _numeric(dps) as num:
        a = _constants(p, dps).a
        c, w = num(p.c), num(omega)
        den1, den2 = 1 - c * a * w, c * (a - w)
        if den1 == 0 or den2 == 0:
            raise ZeroDivisionError("omega substitution hits a pole")
        return (c - 1) * a * w / den1, (c - 1) * w / den2


def hyp_argument(omega, p: SobolevParams, dps: int | None = None):
    """Argument of the 2F1 in the beta != 1 closed form."""
    with _numeric(dps) as num:
        a = _constants(p, dps).a
        c, w = num(p.c), num(omega)
        return w * (c - 1) * (1 - a * a * c) / ((1 - c * a * w) * (a * c - w))


# -- the auxiliary function F --------------------------------------------------


def _require_beta_not_one(p: SobolevParams):
    if p.beta == 1:
        raise ParameterError("F is only defined for beta != 1")


def F_closed(omega, p: SobolevParams, dps: int | None = None):
    """(1 - w/a)^(-(beta-1) gamma) (1 - w c a)^(-(beta-1) delta), |w| < a."""
    _require_beta_not_one(p)
    with _numeric(dps) as num:
        k = _constants(p, dps)
        w, c, bm1 = num(omega), num(p.c), num(p.beta - 1)
        if not abs(w) < k.a:
            raise RegionError(f"F needs |w| < a = {float(k.a)}")
        value = binom_pow(w / k.a, bm1 * k.gamma) * binom_pow(w * c * k.a, bm1 * k.delta)
        return value if dps is None else +value


def h_coefficients(N: int, p: SobolevParams) -> list[Fraction]:
    """Taylor coefficients of F from their own three-term recurrence."""
    _require_beta_not_one(p)
    beta, c, eta = p.beta, p.c, p.eta
    h = [Fraction(1), beta - 1]
    for n in range(1, N):
        h.append(((n * (1 + eta * c) + beta - 1) * h[n] - c * (n + beta - 2) * h[n - 1]) / (n + 1))
    return h[: N + 1]


def h_from_q(N: int, p: SobolevParams) -> list[Fraction]:
    q = q_sequence(N, p)
    return [q[n] * pochhammer(p.beta - 1, n) / math.factorial(n) for n in range(N + 1)]


def _series_field(p: SobolevParams, exact: bool):
    """Constants and a converter for coefficient-level work."""
    if exact:
        return exact_gf_constants(p), (lambda v: as_exact(v)), Fraction(1)
    k = _mp_constants(p)

    return k, (lambda v: to_mpf(as_exact(v))), mpmath.mpf(1)


def F_taylor_coefficients(N: int, p: SobolevParams, exact: bool = False, dps: int = 30):
    """Coefficients of the closed form of F by convolving two binomial series."""
    _require_beta_not_one(p)
    with mpmath.workdps(dps):
        k, conv, unit = _series_field(p, exact)
        bm1, c = conv(p.beta - 1), conv(p.c)
        first = taylor.binomial(-bm1 * k.gamma, 1 / k.a, N, unit)
        second = taylor.binomial(-bm1 * k.delta, c * k.a, N, unit)
        return taylor.mul(first, second, N)


def F_coefficients(N: int, p: SobolevParams, dps: int = 30):
    """(recurrence coefficients h_n, convolution coefficients of the closed form)."""
    return h_coefficients(N, p), F_taylor_coefficients(N, p, dps=dps)


# -- coefficient streams -------------------------------------------------------


def qs_coefficients(x, p: SobolevParams, N: int) -> list[Fraction]:
    """Exact q_n S_n(x), n = 0..N, for rational x."""
    xe = as_exact(x)
    q = q_sequence(N, p)
    S = sobolev_family(N, p)
    return [q[n] * S[n](xe) for n in range(N + 1)]


def gm_taylor_coefficients(x, p: SobolevParams, N: int, exact: bool = False, dps: int = 40):
    """Taylor coefficients in w of the closed form of G_M at fixed x.

    Every factor of the closed form is expanded as a binomial series and the
    expansions are convolved; the terminating 2F1 of the beta != 1 case is
    expanded through powers of its argument.  With ``exact=True`` the
    parameters must give a rational a.
    """
    with mpmath.workdps(dps):
        k, conv, unit = _series_field(p, exact)
        a, g, d = k.a, k.gamma, k.delta
        c = conv(p.c)
        geometric = taylor.binomial(-1, 1, N, unit)
        if p.beta == 1:
            xv = conv(x)
            first = taylor.product(
                [taylor.binomial(xv, 1 / (a * c), N, unit), taylor.binomial(-xv, 1 / a, N, unit)], N, unit
            )
            second = taylor.product(
                [taylor.binomial(xv, a, N, unit), taylor.binomial(-xv, c * a, N, unit)], N, unit
            )
            inner = taylor.add(taylor.scale(first, g), taylor.scale(second, d))
            return taylor.mul(geometric, inner, N)

        xi = _integer_x(x)
        bm1 = conv(p.beta - 1)
        pref = taylor.product(
            [
                geometric,
                taylor.binomial(-bm1 * d, c * a, N, unit),
                taylor.binomial(-bm1 * g, 1 / a, N, unit),
                taylor.binomial(xi, 1 / (a * c), N, unit),
                taylor.binomial(-xi, 1 / a, N, unit),
            ],
            N,
            unit,
        )
        # z(w) = K w / ((1 - c a w)(1 - w/(a c))),  K = (c-1)(1-a^2 c)/(a c)
        K = (c - 1) * (1 - a * a * c) / (a * c)
        zs = taylor.shift(
            taylor.scale(
                taylor.mul(taylor.binomial(-1, c * a, N, unit), taylor.binomial(-1, 1 / (a * c), N, unit), N), K
            ),
            1,
        )
        hyp = taylor.one(N, unit)
        zpow = taylor.one(N, unit)
        coeff = unit
        b = bm1 * d
        for j in range(xi):
            coeff = coeff * (j - xi) * (b + j) / ((bm1 + j) * (j + 1))
            zpow = taylor.mul(zpow, zs, N)
            hyp = taylor.add(hyp, taylor.scale(zpow, coeff))
        return taylor.mul(pref, hyp, N)


def cumulative_sum_check(n: int, p: SobolevParams) -> bool:
    """q_n S_n(x) == sum_{k<=n} q_k m_k(x; beta-1, c) exactly.

    S_n is taken from the Gram–Schmidt construction and m_k from the
    explicit sum, so neither side reuses the telescoped construction.
    """
    return cumulative_sum_checks(n, p)[n]


def cumulative_sum_checks(N: int, p: SobolevParams) -> list[bool]:
    """:func:`cumulative_sum_check` for n = 0..N, sharing one Gram–Schmidt run."""
    q = q_sequence(N, p)
    S = gram_schmidt_family(N, p)
    out = []
    rhs = S[0] * 0
    for n in range(N + 1):
        rhs = rhs + meixner_poly(n, p.shifted) * q[n]
        out.append(S[n] * q[n] == rhs)
    return out
