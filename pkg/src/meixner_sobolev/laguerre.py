"""Laguerre and Laguerre–Sobolev polynomials and the c -> 1 bridge.

Laguerre polynomials L_n^(alpha) carry leading coefficient (-1)^n / n!.
Inner products are divided by Gamma(alpha + 1), which leaves the moments
(alpha + 1)_k and keeps everything rational for rational alpha.

The bridge uses beta = alpha + 1 and lambda = lambda_t / (1 - c)^2, then
lets c increase to 1 along c = 1 - 2^-k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from .errors import ParameterError, RegionError
from .genfun import gm_closed
from .hypergeom import SeriesOptions, binom_pow, exp, hyp1f1_series, to_mpf
from .meixner import MeixnerParams, meixner_family
from .poly_core import Polynomial, as_exact, pochhammer
from .sobolev import SobolevParams, q_sequence, sobolev_family


@dataclass(frozen=True)
class LaguerreSobolevParams:
    alpha: Fraction
    lambda_t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_exact(self.alpha))
        object.__setattr__(self, "lambda_t", as_exact(self.lambda_t))
        if not self.alpha > -1:
            raise ParameterError(f"alpha must exceed -1, got {self.alpha}")
        if not self.lambda_t > 0:
            raise ParameterError(f"lambda_t must be positive, got {self.lambda_t}")

    @property
    def a_tilde(self) -> float:
        lt = float(self.lambda_t)
        # (lt + 2 - sqrt(lt^2 + 4 lt)) / 2 without the cancellation
        return 2 / (lt + 2 + math.sqrt(lt * lt + 4 * lt))

    def sobolev_at(self, c) -> SobolevParams:
        """Meixner-side parameters (alpha+1, c, lambda_t / (1-c)^2)."""
        c = as_exact(c)
        return SobolevParams(self.alpha + 1, c, self.lambda_t / (1 - c) ** 2)


@lru_cache(maxsize=64)
def laguerre_family(N: int, alpha) -> tuple[Polynomial, ...]:
    """(n+1) L_{n+1} = (2n + alpha + 1 - x) L_n - (n + alpha) L_{n-1}."""
    alpha = as_exact(alpha)
    fam = [Polynomial.constant(Fraction(1))]
    prev = Polynomial()
    for n in range(N):
        nxt = (Polynomial([2 * n + alpha + 1, Fraction(-1)]) * fam[n] - prev * (n + alpha)) / (n + 1)
        prev = fam[n]
        fam.append(nxt)
    return tuple(fam)


def laguerre_poly(n: int, alpha) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return laguerre_family(n, as_exact(alpha))[n]


@lru_cache(maxsize=64)
def laguerre_moments(J: int, alpha) -> tuple[Fraction, ...]:
    """int x^k x^alpha e^-x dx / Gamma(alpha+1) = (alpha+1)_k."""
    out = [Fraction(1)]
    for k in range(J):
        out.append(out[-1] * (alpha + 1 + k))
    return tuple(out)


def laguerre_inner(f: Polynomial, g: Polynomial, alpha) -> Fraction:
    alpha = as_exact(alpha)
    if not alpha > -1:
        raise ParameterError("alpha must exceed -1")
    prod = f * g
    if prod.is_zero():
        return Fraction(0)
    mom = laguerre_moments(prod.degree, alpha)
    return sum((c * mom[i] for i, c in enumerate(prod.coeffs)), Fraction(0))


def laguerre_sobolev_inner(f: Polynomial, g: Polynomial, p: LaguerreSobolevParams) -> Fraction:
    return laguerre_inner(f, g, p.alpha) + p.lambda_t * laguerre_inner(f.derivative(), g.derivative(), p.alpha)


@lru_cache(maxsize=32)
def laguerre_sobolev_family(N: int, p: LaguerreSobolevParams) -> tuple[Polynomial, ...]:
    """Gram–Schmidt on 1, x, ..., x^N under the Laguerre–Sobolev product.

    Works on the monomial Gram matrix
        G[i][j] = mu_{i+j} + lambda_t i j mu_{i+j-2},  mu_k = (alpha+1)_k
    so each projection is a dot product rather than a polynomial product.
    """
    mu = laguerre_moments(2 * N, p.alpha)
    lt = p.lambda_t

    def gram(i, j):
        v = mu[i + j]
        if i and j:
            v += lt * i * j * mu[i + j - 2]
        return v

    monic: list[list[Fraction]] = []
    norms: list[Fraction] = []
    out = []
    for n in range(N + 1):
        row = [gram(n, i) for i in range(n + 1)]  # <x^n, x^i>
        v = [Fraction(0)] * n + [Fraction(1)]
        for k in range(n):
            P = monic[k]
            proj = sum((P[i] * row[i] for i in range(k + 1)), Fraction(0)) / norms[k]
            for i in range(k + 1):
                v[i] -= proj * P[i]
        # <v, v> = <v, x^n> since v is orthogonal to lower degrees
        norms.append(sum((v[i] * row[i] for i in range(n + 1)), Fraction(0)))
        monic.append(v)
        scale = Fraction((-1) ** n, math.factorial(n))
        out.append(Polynomial(c * scale for c in v))
    return tuple(out)


def laguerre_sobolev_poly(n: int, p: LaguerreSobolevParams) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return laguerre_sobolev_family(n, p)[n]


def laguerre_sobolev_gram_schmidt(n: int, p: LaguerreSobolevParams) -> Polynomial:
    """Plain polynomial Gram–Schmidt; slow, kept as a cross-check."""
    basis: list[Polynomial] = []
    for k in range(n + 1):
        xk = Polynomial.monomial(k)
        v = xk
        for b in basis:
            v = v - b * (laguerre_sobolev_inner(xk, b, p) / laguerre_sobolev_inner(b, b, p))
        basis.append(v)
    return basis[n] * (Fraction((-1) ** n, math.factorial(n)) / basis[n].lc)


def qL_sequence(N: int, p: LaguerreSobolevParams) -> list[Fraction]:
    """(n+alpha) q_{n+1} = [n (lambda_t + 2) + alpha] q_n - n q_{n-1}, q_0 = q_1 = 1."""
    alpha, lt = p.alpha, p.lambda_t
    q = [Fraction(1), Fraction(1)]
    for n in range(1, N):
        q.append(((n * (lt + 2) + alpha) * q[n] - n * q[n - 1]) / (n + alpha))
    return q[: N + 1]


def gl_closed(x, omega, p: LaguerreSobolevParams, dps: int | None = None):
    """Closed form of G_L(x, w) = sum_n q_n^L S_n^L(x) w^n for |w| < a_tilde."""
    if dps is not None:
        with mpmath.workdps(dps):
            x, omega, alpha = to_mpf(as_exact(x)), to_mpf(as_exact(omega)), to_mpf(p.alpha)
            return +_gl_closed(x, omega, p, _mp_a_tilde(p), alpha, dps)
    return _gl_closed(float(x), float(omega), p, p.a_tilde, float(p.alpha), None)


def _mp_a_tilde(p: LaguerreSobolevParams):
    lt = to_mpf(p.lambda_t)
    return 2 / (lt + 2 + mpmath.sqrt(lt * lt + 4 * lt))


def _gl_closed(x, w, p, at, alpha, dps):
    if not abs(w) < at:
        raise RegionError(f"G_L needs |w| < a_tilde = {float(at)}, got {w}")
    outer = exp(-x * (w / at) / (1 - w / at))
    if p.alpha == 0:
        inner = exp(-x * w * at / (1 - w * at))
        return (inner + at * outer) / ((1 - w) * (1 + at))
    opts = SeriesOptions(tol=10.0 ** -(dps or 16))
    z = x * w * (1 - at * at) / ((at - w) * (1 - w * at))
    return (
        binom_pow(at * w, alpha / (1 + at))
        * binom_pow(w / at, alpha * at / (1 + at))
        * outer
        * hyp1f1_series(alpha / (1 + at), alpha, z, opts)
        / (1 - w)
    )


def gl_truncated(x, omega, p: LaguerreSobolevParams, N: int = 80) -> float:
    xe = as_exact(x)
    q = qL_sequence(N, p)
    S = laguerre_sobolev_family(N, p)
    return sum(float(q[n] * S[n](xe)) * omega**n for n in range(N + 1))


# -- limit bridge --------------------------------------------------------------


def dyadic_c_sequence(k_min: int = 4, k_max: int = 12) -> list[Fraction]:
    return [1 - Fraction(1, 2**k) for k in range(k_min, k_max + 1)]


def is_monotone_decreasing(errors: Sequence[float]) -> bool:
    return all(b <= a for a, b in zip(errors, errors[1:]))


def meixner_laguerre_limit_check(n: int, x, alpha, c_seq: Sequence) -> list[float]:
    """|c^n m_n(x/(1-c); alpha+1, c) - L_n^(alpha)(x)| for each c, computed exactly."""
    x, alpha = as_exact(x), as_exact(alpha)
    target = laguerre_poly(n, alpha)(x)
    out = []
    for c in c_seq:
        c = as_exact(c)
        m = meixner_family(n, MeixnerParams(alpha + 1, c))[n]
        out.append(abs(float(c**n * m(x / (1 - c)) - target)))
    return out


def sobolev_limit_check(n: int, x, p: LaguerreSobolevParams, c_seq: Sequence) -> list[float]:
    """|c^n S_n(x/(1-c)) - S_n^L(x)| with lambda = lambda_t / (1-c)^2, exact."""
    x = as_exact(x)
    target = laguerre_sobolev_poly(n, p)(x)
    out = []
    for c in c_seq:
        c = as_exact(c)
        S = sobolev_family(n, p.sobolev_at(c))[n]
        out.append(abs(float(c**n * S(x / (1 - c)) - target)))
    return out


def q_limit_check(n: int, p: LaguerreSobolevParams, c_seq: Sequence) -> list[float]:
    """|q_n(eta(c)) - q_n^L| along the sequence."""
    target = qL_sequence(n, p)[n]
    return [abs(float(q_sequence(n, p.sobolev_at(c))[n] - target)) for c in c_seq]


def gf_limit_check(x, omega, p: LaguerreSobolevParams, c_seq: Sequence, dps: int | None = None) -> list[float]:
    """|G_M(x/(1-c), c w, lambda_t/(1-c)^2) - G_L(x, w)| along the sequence.

    For alpha != 0 the Meixner-side closed form needs x/(1-c) to be an integer.
    """
    x = as_exact(x)
    target = gl_closed(x, omega, p, dps=dps)
    out = []
    for c in c_seq:
        c = as_exact(c)
        X = x / (1 - c)
        if p.alpha != 0:
            if X.denominator != 1:
                raise ParameterError(f"x/(1-c) = {X} is not an integer")
            X = X.numerator
        if dps is None:
            value = gm_closed(X, float(c) * omega, p.sobolev_at(c))
            out.append(abs(value - target))
        else:
            with mpmath.workdps(dps):
                value = gm_closed(X, to_mpf(c) * to_mpf(as_exact(omega)), p.sobolev_at(c), dps=dps)
                out.append(float(abs(value - target)))
    return out
