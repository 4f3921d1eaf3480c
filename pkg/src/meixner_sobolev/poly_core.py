"""Exact scalars, dense polynomials and a few combinatorial helpers.

Exact scalars are :class:`fractions.Fraction` instances; they are always kept
in lowest terms with a positive denominator, which is all the package needs
from a rational field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

ExactScalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def as_exact(value) -> Fraction:
    """Convert ints, Fractions, "p/q" strings or floats to a Fraction.

    Floats are converted by their exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse the strict "p/q" (or integer) form used for exact parameters."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"expected an integer or p/q rational, got {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.

    Works for any numeric type supporting ``+`` and ``*``; exact inputs give
    exact results.
    """
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    if isinstance(a, (int, Fraction)):
        result = Fraction(1)
    else:
        result = a * 0 + 1
    for i in range(n):
        result = result * (a + i)
    return result


@lru_cache(maxsize=None)
def _stirling2_row(j: int) -> tuple[int, ...]:
    if j == 0:
        return (1,)
    prev = _stirling2_row(j - 1)
    row = [0] * (j + 1)
    for k in range(1, j + 1):
        left = prev[k - 1]
        right = prev[k] if k < len(prev) else 0
        row[k] = left + k * right
    return tuple(row)


def stirling2(j: int, k: int) -> int:
    """Stirling number of the second kind S2(j, k)."""
    if k < 0 or k > j:
        return 0
    return _stirling2_row(j)[k]


def stirling_convert(falling_moments: Sequence) -> list:
    """Turn factorial moments E[(k)_j falling] into power moments E[k^j].

    ``output[j] = sum_k S2(j, k) * falling_moments[k]``.
    """
    out = []
    for j in range(len(falling_moments)):
        row = _stirling2_row(j)
        out.append(sum((row[k] * falling_moments[k] for k in range(j + 1)), Fraction(0)))
    return out


class Polynomial:
    """Dense polynomial in one indeterminate, coefficient i multiplies x**i.

    Instances are immutable; trailing zero coefficients are trimmed so the
    zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls([value])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([Fraction(0), Fraction(1)])

    @classmethod
    def monomial(cls, n: int, coeff=Fraction(1)) -> "Polynomial":
        return cls([Fraction(0)] * n + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, float)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = format_rational(c) if isinstance(c, Fraction) else repr(c)
            terms.append(cs if i == 0 else f"{cs}*x" if i == 1 else f"{cs}*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        zero = self.coeffs[0] * 0 * other.coeffs[0]
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Polynomial([Fraction(1)])
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return Polynomial(c / scalar for c in self.coeffs)

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift(self, h=1) -> "Polynomial":
        """Return p(x + h)."""
        n = len(self.coeffs)
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            # binomial expansion of c * (x + h)^i
            binom = 1
            hp = 1
            for j in range(i, -1, -1):
                out[j] += c * binom * hp
                binom = binom * j // (i - j + 1)
                hp = hp * h
        return Polynomial(out)

    def map_coeffs(self, fn) -> "Polynomial":
        return Polynomial(fn(c) for c in self.coeffs)


def forward_difference(p: Polynomial) -> Polynomial:
    """(Δp)(x) = p(x+1) - p(x)."""
    return p.shift(1) - p


def poly_eval(p: Polynomial, x):
    """Horner evaluation; exact for exact ``x``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_eval_real(p: Polynomial, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def rising_factorial_poly(k: int, shift=Fraction(0)) -> Polynomial:
    """(-x + shift)_k as a polynomial in x."""
    out = Polynomial.constant(Fraction(1))
    for i in range(k):
        out = out * Polynomial([shift + i, Fraction(-1)])
    return out


def is_canonical(value: Fraction) -> bool:
    from math import gcd

    return value.denominator > 0 and gcd(abs(value.numerator), value.denominator) == 1


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational when it is itself rational."""
    from math import isqrt

    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
