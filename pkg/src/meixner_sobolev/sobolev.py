"""Δ-Meixner–Sobolev polynomials.

The Sobolev inner product adds lambda times the Pascal inner product of
forward differences to the Pascal inner product itself.  Its monic-ish
orthogonal family S_n (normalised to share leading coefficients with
m_n(x; beta, c)) is obtained from the classical family through the
coefficients a_n and q_n:

    q_n S_n(x) = sum_{k<=n} q_k m_k(x; beta - 1, c),   q_{n+1} = q_n / a_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError
from .meixner import MeixnerParams, leading_coefficient, meixner_family, pascal_inner
from .poly_core import Polynomial, as_exact, exact_sqrt, forward_difference


@dataclass(frozen=True)
class SobolevParams:
    beta: Fraction
    c: Fraction
    lam: Fraction

    def __post_init__(self):
        for name in ("beta", "c", "lam"):
            object.__setattr__(self, name, as_exact(getattr(self, name)))
        if not self.beta > 0:
            raise ParameterError(f"beta must be positive, got {self.beta}")
        if not 0 < self.c < 1:
            raise ParameterError(f"c must lie in (0, 1), got {self.c}")
        if self.lam < 0:
            raise ParameterError(f"lambda must be nonnegative, got {self.lam}")

    @property
    def eta(self) -> Fraction:
        return 1 + self.lam * (1 - 1 / self.c) ** 2

    @property
    def meixner(self) -> MeixnerParams:
        return MeixnerParams(self.beta, self.c)

    @property
    def shifted(self) -> MeixnerParams:
        """Parameters (beta - 1, c) of the family the S_n telescope into."""
        return MeixnerParams(self.beta - 1, self.c)


@dataclass(frozen=True)
class CoefficientTables:
    a: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    q_poly: tuple[Polynomial, ...]


def a_sequence(N: int, p: SobolevParams) -> list[Fraction]:
    """a_0 .. a_N with a_0 = 1 and

    a_n = (n+beta-1) / (n+beta-1 + eta c n - c n a_{n-1}).
    """
    beta, c, eta = p.beta, p.c, p.eta
    a = [Fraction(1)]
    for n in range(1, N + 1):
        a.append((n + beta - 1) / (n + beta - 1 + eta * c * n - c * n * a[-1]))
    return a


def a_limit(p: SobolevParams) -> float:
    """Smaller root of c z^2 - (1 + eta c) z + 1 = 0."""
    b = 1 + p.eta * p.c
    root = exact_sqrt(b * b - 4 * p.c)
    if root is not None:
        return float(2 / (b + root))
    b, disc = float(b), float(b * b - 4 * p.c)
    # cancellation-free form of (b - sqrt(disc)) / (2c)
    return 2 / (b + math.sqrt(disc))


def q_sequence(N: int, p: SobolevParams) -> list[Fraction]:
    """q_0 .. q_N from (n+beta-1) q_{n+1} = (n+beta-1+eta c n) q_n - c n q_{n-1}."""
    beta, c, eta = p.beta, p.c, p.eta
    q = [Fraction(1), Fraction(1)]
    for n in range(1, N):
        q.append(((n + beta - 1 + eta * c * n) * q[n] - c * n * q[n - 1]) / (n + beta - 1))
    return q[: N + 1]


def q_from_ratios(a: list[Fraction]) -> list[Fraction]:
    """q_0 = 1, q_{n+1} = q_n / a_n."""
    q = [Fraction(1)]
    for an in a[:-1]:
        q.append(q[-1] / an)
    return q


def q_polynomials(N: int, p: SobolevParams) -> list[Polynomial]:
    """q_n as polynomials in eta (beta and c fixed)."""
    beta, c = p.beta, p.c
    one = Polynomial.constant(Fraction(1))
    q = [one, one]
    for n in range(1, N):
        factor = Polynomial([n + beta - 1, c * n])
        q.append((factor * q[n] - q[n - 1] * (c * n)) / (n + beta - 1))
    return q[: N + 1]


def coefficient_tables(N: int, p: SobolevParams) -> CoefficientTables:
    return CoefficientTables(
        a=tuple(a_sequence(N, p)),
        q=tuple(q_sequence(N, p)),
        q_poly=tuple(q_polynomials(N, p)),
    )


def sobolev_inner(f: Polynomial, g: Polynomial, p: SobolevParams) -> Fraction:
    """Normalised (f, g) + lambda (Δf, Δg) under the Pascal measure."""
    mp = p.meixner
    value = pascal_inner(f, g, mp)
    if p.lam:
        value += p.lam * pascal_inner(forward_difference(f), forward_difference(g), mp)
    return value


@lru_cache(maxsize=128)
def sobolev_family(N: int, p: SobolevParams) -> tuple[Polynomial, ...]:
    """S_0 .. S_N by the telescoped sum over m_k(x; beta - 1, c)."""
    q = q_sequence(N, p)
    shifted = meixner_family(N, p.shifted)
    out = []
    running = Polynomial()
    for n in range(N + 1):
        running = running + shifted[n] * q[n]
        out.append(running / q[n])
    return tuple(out)


def sobolev_poly(n: int, p: SobolevParams) -> Polynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return sobolev_family(n, p)[n]


@lru_cache(maxsize=64)
def gram_schmidt_family(N: int, p: SobolevParams) -> tuple[Polynomial, ...]:
    """Orthogonalise 1, x, ..., x^N under :func:`sobolev_inner`, then rescale."""
    basis: list[Polynomial] = []
    norms: list[Fraction] = []
    for n in range(N + 1):
        xn = Polynomial.monomial(n)
        v = xn
        for b, nb in zip(basis, norms):
            v = v - b * (sobolev_inner(xn, b, p) / nb)
        basis.append(v)
        norms.append(sobolev_inner(v, v, p))
    return tuple(b * (leading_coefficient(n, p.c) / b.lc) for n, b in enumerate(basis))


def gram_schmidt_oracle(n: int, p: SobolevParams) -> Polynomial:
    return gram_schmidt_family(n, p)[n]


def telescoping_check(n: int, p: SobolevParams) -> bool:
    """m_n - m_{n-1} == S_n - a_{n-1} S_{n-1} as exact polynomials."""
    if n < 1:
        raise ValueError("telescoping relation starts at n = 1")
    m = meixner_family(n, p.meixner)
    S = sobolev_family(n, p)
    a = a_sequence(n - 1, p)
    return m[n] - m[n - 1] == S[n] - S[n - 1] * a[n - 1]
