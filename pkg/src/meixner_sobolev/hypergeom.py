"""Real-argument hypergeometric kernels.

All routines use plain arithmetic on their arguments, so they run in double
precision for floats and in extended precision when handed ``mpmath.mpf``
values (under an appropriate ``mpmath.workdps`` context).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ConvergenceError, PoleError, RegionError


@dataclass(frozen=True)
class SeriesOptions:
    tol: float = 1e-16
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_OPTIONS = SeriesOptions()


def _is_nonpositive_int(v) -> bool:
    return v <= 0 and v == int(v)


def _check_lower(c0, upto=None):
    if _is_nonpositive_int(c0) and (upto is None or -c0 < upto):
        raise PoleError(f"lower parameter {c0} is a nonpositive integer")


def hyp2f1_terminating(m: int, b, c0, z):
    """2F1(-m, b; c0; z) as the finite sum over k = 0..m."""
    if m < 0 or int(m) != m:
        raise ValueError("terminating 2F1 needs a nonnegative integer m")
    m = int(m)
    _check_lower(c0, upto=m)
    term = z * 0 + 1
    total = term
    for k in range(m):
        term = term * (k - m) * (b + k) / ((c0 + k) * (k + 1)) * z
        total = total + term
    return total


def _sum_series(ratio, z, opts: SeriesOptions):
    """Sum t_0 = 1, t_{k+1} = t_k * ratio(k) * z until |t_k| <= tol |sum|.

    Returns ``(value, n_terms)``.  A zero term (terminating series) stops the
    summation immediately.
    """
    term = z * 0 + 1
    total = term
    small = 0
    for k in range(opts.max_terms):
        term = term * ratio(k) * z
        total = total + term
        if term == 0:
            return total, k + 2
        if abs(term) <= opts.tol * abs(total):
            # two consecutive small terms guard against accidental near-zeros
            small += 1
            if small >= 2:
                return total, k + 2
        else:
            small = 0
    raise ConvergenceError(f"series did not converge in {opts.max_terms} terms (z={z})")


def hyp2f1_series(a, b, c0, z, opts: SeriesOptions | None = None, full_output: bool = False):
    """Gauss 2F1(a, b; c0; z) by direct summation, |z| < 1."""
    opts = opts or DEFAULT_OPTIONS
    if z == 0:
        one = z * 0 + 1
        return (one, 1) if full_output else one
    if abs(z) >= 1:
        raise RegionError(f"2F1 series needs |z| < 1, got {z}")
    if _is_nonpositive_int(a):
        _check_lower(c0, upto=int(-a))
    else:
        _check_lower(c0)
    value, n = _sum_series(lambda k: (a + k) * (b + k) / ((c0 + k) * (k + 1)), z, opts)
    return (value, n) if full_output else value


def hyp1f1_series(a, c0, z, opts: SeriesOptions | None = None, full_output: bool = False):
    """Kummer 1F1(a; c0; z) by direct summation."""
    opts = opts or DEFAULT_OPTIONS
    if _is_nonpositive_int(a):
        _check_lower(c0, upto=int(-a))
    else:
        _check_lower(c0)
    if z == 0:
        one = z * 0 + 1
        return (one, 1) if full_output else one
    value, n = _sum_series(lambda k: (a + k) / ((c0 + k) * (k + 1)), z, opts)
    return (value, n) if full_output else value


def binom_pow(z, p):
    """(1 - z)^(-p) on the principal real branch."""
    base = 1 - z
    if base <= 0 and p != int(p):
        raise RegionError(f"(1 - z)^(-p) has no real value for 1 - z = {base}, p = {p}")
    if base == 0 and p > 0:
        raise PoleError("(1 - z)^(-p) is singular at z = 1")
    if p == int(p) and not isinstance(base, mpmath.mpf):
        return float(base) ** (-int(p))
    return base ** (-p)


def binom_series(z, p, opts: SeriesOptions | None = None):
    """sum_j (p)_j z^j / j!, the series side of :func:`binom_pow`."""
    opts = opts or DEFAULT_OPTIONS
    if abs(z) >= 1:
        raise RegionError("binomial series needs |z| < 1")
    return _sum_series(lambda j: (p + j) / (j + 1), z, opts)[0]


def hyp2f1(a, b, c0, z, opts: SeriesOptions | None = None):
    """Terminating sum when a is a nonpositive integer, series otherwise."""
    if _is_nonpositive_int(a):
        return hyp2f1_terminating(int(-a), b, c0, z)
    return hyp2f1_series(a, b, c0, z, opts)


def pfaff_kummer_check(a, b, c0, z, opts: SeriesOptions | None = None):
    """Both sides of 2F1(a,b;c0;z) = (1-z)^(-b) 2F1(c0-a, b; c0; z/(z-1))."""
    left = hyp2f1(a, b, c0, z, opts)
    right = binom_pow(z, b) * hyp2f1(c0 - a, b, c0, z / (z - 1), opts)
    return left, right


def bilateral_2f1_check(a, b, c0, y, z, K: int | None = None, opts: SeriesOptions | None = None):
    """Both sides of the bilateral summation

        sum_k (a)_k (b)_k / (c0)_k y^k / k! 2F1(c0-a, c0-b; c0+k; z)
            = (1-z)^(a+b-c0) 2F1(a, b; c0; z + y - z y).

    The left sum stops after ``K`` terms, or earlier when a or b is a
    nonpositive integer (the sum then terminates), or once terms fall below
    the series tolerance.
    """
    opts = opts or DEFAULT_OPTIONS
    if K is None:
        K = opts.max_terms
    for top in (a, b):
        if _is_nonpositive_int(top):
            K = min(K, int(-top) + 1)
    w = z + y - z * y
    if abs(w) >= 1:
        raise RegionError(f"right-hand 2F1 argument {w} outside |w| < 1")
    coeff = z * 0 + 1
    left = 0
    small = 0
    for k in range(K):
        term = coeff * hyp2f1(c0 - a, c0 - b, c0 + k, z, opts)
        left = left + term
        if k > 0 and abs(term) <= opts.tol * abs(left):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        coeff = coeff * (a + k) * (b + k) / ((c0 + k) * (k + 1)) * y
    else:
        if K == opts.max_terms:
            raise ConvergenceError("bilateral sum did not converge")
    right = binom_pow(z, -(a + b - c0)) * hyp2f1(a, b, c0, w, opts)
    return left, right


def to_mpf(v):
    """mpmath value at the current working precision (Fractions exactly rounded)."""
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def sqrt(v):
    return mpmath.sqrt(v) if isinstance(v, mpmath.mpf) else math.sqrt(v)


def exp(v):
    return mpmath.exp(v) if isinstance(v, mpmath.mpf) else math.exp(v)
