"""Truncated power series in one variable, as plain coefficient lists.

Coefficient type is whatever the caller supplies (Fraction for exact work,
mpmath.mpf for extended precision).  Every list has length N + 1.
"""

from __future__ import annotations


def one(N: int, unit):
    return [unit] + [unit * 0] * N


def binomial(p, t, N: int, unit):
    """Coefficients of (1 - t w)^p up to w^N."""
    out = [unit]
    for j in range(1, N + 1):
        out.append(out[-1] * (j - 1 - p) / j * t)
    return out


def mul(a, b, N: int):
    out = []
    for n in range(N + 1):
        acc = a[0] * b[n]
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def product(factors, N: int, unit):
    out = one(N, unit)
    for f in factors:
        out = mul(out, f, N)
    return out


def scale(a, s):
    return [v * s for v in a]


def add(a, b):
    return [u + v for u, v in zip(a, b)]


def shift(a, k: int):
    """Multiply by w^k, keeping the length."""
    zero = a[0] * 0
    return [zero] * k + a[: len(a) - k]
