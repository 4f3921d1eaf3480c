"""Classical Meixner polynomials m_n(x; beta, c) and the Pascal measure.

The polynomials are built for any rational beta and any c outside {0, 1};
everything that integrates against the Pascal weight c^k (beta)_k / k!
requires beta > 0 and 0 < c < 1.

Measure quantities are returned with the total-mass normalisation
(1 - c)^beta already applied so they stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError
from .poly_core import (
    Polynomial,
    as_exact,
    pochhammer,
    poly_eval_real,
    rising_factorial_poly,
    stirling_convert,
)


@dataclass(frozen=True)
class MeixnerParams:
    beta: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_exact(self.beta))
        object.__setattr__(self, "c", as_exact(self.c))
        if self.c in (0, 1):
            raise ParameterError(f"Meixner parameter c must differ from 0 and 1, got {self.c}")

    @property
    def orthogonal_regime(self) -> bool:
        return self.beta > 0 and 0 < self.c < 1

    def require_measure(self) -> None:
        if not self.orthogonal_regime:
            raise ParameterError(
                f"Pascal measure needs beta > 0 and 0 < c < 1 (beta={self.beta}, c={self.c})"
            )


def meixner_poly(n: int, p: MeixnerParams) -> Polynomial:
    """Explicit form: sum_k (beta+k)_{n-k} / (k! (n-k)!) (-x)_k (1/c - 1)^k."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    r = 1 / p.c - 1
    out = Polynomial()
    for k in range(n + 1):
        coeff = pochhammer(p.beta + k, n - k) / (math.factorial(k) * math.factorial(n - k)) * r**k
        out = out + rising_factorial_poly(k) * coeff
    return out


@lru_cache(maxsize=256)
def meixner_family(N: int, p: MeixnerParams) -> tuple[Polynomial, ...]:
    """m_0 .. m_N from the three-term recurrence.

    c (n+1) m_{n+1} = [x (c-1) + beta c + n (c+1)] m_n - (n + beta - 1) m_{n-1}
    """
    beta, c = p.beta, p.c
    family = [Polynomial.constant(Fraction(1))]
    prev = Polynomial()
    for n in range(N):
        factor = Polynomial([beta * c + n * (c + 1), c - 1])
        nxt = (factor * family[n] - prev * (n + beta - 1)) / (c * (n + 1))
        prev = family[n]
        family.append(nxt)
    return tuple(family)


def meixner_poly_recurrence(n: int, p: MeixnerParams) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return meixner_family(n, p)[n]


def leading_coefficient(n: int, c) -> Fraction:
    return (1 - 1 / as_exact(c)) ** n / math.factorial(n)


def pascal_factorial_moment(j: int, p: MeixnerParams) -> Fraction:
    """Normalised factorial moment (beta)_j (c / (1 - c))^j."""
    p.require_measure()
    return pochhammer(p.beta, j) * (p.c / (1 - p.c)) ** j


@lru_cache(maxsize=256)
def pascal_power_moments(J: int, p: MeixnerParams) -> tuple[Fraction, ...]:
    """Normalised power moments E[k^j], j = 0..J, under the Pascal measure."""
    p.require_measure()
    falling = [pascal_factorial_moment(j, p) for j in range(J + 1)]
    return tuple(stirling_convert(falling))


def contract_moments(poly: Polynomial, moments) -> Fraction:
    return sum((c * moments[i] for i, c in enumerate(poly.coeffs)), Fraction(0))


def pascal_inner(f: Polynomial, g: Polynomial, p: MeixnerParams) -> Fraction:
    """(1-c)^beta * sum_k f(k) g(k) c^k (beta)_k / k!, exactly."""
    p.require_measure()
    prod = f * g
    if prod.is_zero():
        return Fraction(0)
    return contract_moments(prod, pascal_power_moments(prod.degree, p))


def meixner_norm(n: int, p: MeixnerParams) -> Fraction:
    """Normalised squared norm (beta)_n / (n! c^n)."""
    p.require_measure()
    return pochhammer(p.beta, n) / (math.factorial(n) * p.c**n)


def pascal_inner_series(
    f: Polynomial, g: Polynomial, p: MeixnerParams, tail: float = 1e-30, normalized: bool = True
) -> float:
    """Floating-point partial summation of the defining series.

    Independent of the moment route; stops once the weights are decreasing
    and a term drops below ``tail`` (relative to the running sum).
    """
    p.require_measure()
    beta, c = float(p.beta), float(p.c)
    prod = f * g
    deg = max(prod.degree, 0)
    # |f(k) g(k)| <= coeff_bound * k^deg for k >= 1
    coeff_bound = sum(abs(float(cf)) for cf in prod.coeffs)
    weight = (1 - c) ** beta if normalized else 1.0
    total = 0.0
    k = 0
    while True:
        term = poly_eval_real(f, k) * poly_eval_real(g, k) * weight
        total += term
        past_mode = c * (beta + k) / (k + 1) * ((k + 2) / (k + 1)) ** deg < 1
        bound = abs(weight) * coeff_bound * (k + 1.0) ** deg
        if k > 0 and past_mode and bound < tail * max(1.0, abs(total)):
            return total
        weight *= c * (beta + k) / (k + 1)
        k += 1
        if k > 1_000_000:
            raise RuntimeError("series oracle failed to terminate")
