"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists
PASS or FAIL per criterion.  Timed criteria start from cold caches.
"""

import time
from fractions import Fraction

import mpmath
import pytest

from meixner_sobolev import genfun, hypergeom, laguerre, meixner, poly_core, sobolev
from meixner_sobolev.meixner import MeixnerParams
from meixner_sobolev.poly_core import forward_difference
from meixner_sobolev.sobolev import SobolevParams
from meixner_sobolev.suites import bilateral_constellations, hypergeom_binomial, pfaff_kummer_grid

H = Fraction(1, 2)
GRID = (
    SobolevParams(2, H, 1),
    SobolevParams(1, H, 1),
    SobolevParams(3, Fraction(1, 3), 2),
    SobolevParams(Fraction(5, 2), Fraction(2, 3), Fraction(1, 10)),
)
GENERAL_BETAS = [Fraction(b) for b in ("-1/2", "0", "1", "2", "7/3")]
CS = [Fraction(1, 3), H, Fraction(3, 4)]
XS = (0, 1, 2, 5)
LAGUERRE = (laguerre.LaguerreSobolevParams(0, 1), laguerre.LaguerreSobolevParams(1, 1))
DYADIC = laguerre.dyadic_c_sequence(4, 12)

CACHED = (
    poly_core._stirling2_row,
    meixner.meixner_family,
    meixner.pascal_power_moments,
    sobolev.sobolev_family,
    sobolev.gram_schmidt_family,
    laguerre.laguerre_family,
    laguerre.laguerre_moments,
    laguerre.laguerre_sobolev_family,
)


class Stopwatch:
    def __enter__(self):
        for fn in CACHED:
            fn.cache_clear()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


def omegas(p):
    return (-0.05, 0.05, 0.1, 0.25 * genfun.gf_constants(p).a * float(p.c))


@pytest.mark.criterion(1, "exact classical orthogonality and norms, n <= 12 (< 5 s)")
def test_classical_orthogonality():
    with Stopwatch() as sw:
        for p in GRID:
            mp = p.meixner
            fam = meixner.meixner_family(12, mp)
            for i in range(13):
                for j in range(13):
                    expected = meixner.meixner_norm(i, mp) if i == j else 0
                    assert meixner.pascal_inner(fam[i], fam[j], mp) == expected, (mp, i, j)
            assert meixner.meixner_norm(3, mp) == poly_core.pochhammer(mp.beta, 3) / (6 * mp.c**3)
    assert sw.elapsed < 5


@pytest.mark.criterion(2, "exact shift, difference and explicit-vs-recurrence, n <= 25 (< 5 s)")
def test_shift_and_difference_relations():
    with Stopwatch() as sw:
        for beta in GENERAL_BETAS:
            for c in CS:
                mp = MeixnerParams(beta, c)
                rec = meixner.meixner_family(25, mp)
                lower = meixner.meixner_family(25, MeixnerParams(beta - 1, c))
                for n in range(26):
                    assert meixner.meixner_poly(n, mp) == rec[n]
                for n in range(1, 26):
                    assert rec[n] - rec[n - 1] == lower[n]
                    assert forward_difference(rec[n] - rec[n - 1]) == rec[n - 1] * ((c - 1) / c)
    assert sw.elapsed < 5


@pytest.mark.criterion(3, "exact Sobolev orthogonality and Gram-Schmidt match, n <= 12 (< 30 s)")
def test_sobolev_orthogonality():
    with Stopwatch() as sw:
        for p in GRID:
            S = sobolev.sobolev_family(12, p)
            for j in range(13):
                for i in range(j):
                    assert sobolev.sobolev_inner(S[i], S[j], p) == 0, (p, i, j)
            assert sobolev.gram_schmidt_family(12, p) == S
    assert sw.elapsed < 30


@pytest.mark.criterion(4, "exact telescoping and cumulative Meixner sum, n <= 20 (< 10 s)")
def test_telescoping_and_series_reduction():
    with Stopwatch() as sw:
        for p in GRID:
            for n in range(1, 21):
                assert sobolev.telescoping_check(n, p), (p, n)
            assert all(genfun.cumulative_sum_checks(20, p)), p
    assert sw.elapsed < 10


@pytest.mark.criterion(5, "a_n / q_n consistency, a_40 vs limit at c = 1/2, quadratic, lambda = 0")
def test_coefficient_sequences():
    for p in GRID:
        a = sobolev.a_sequence(40, p)
        assert sobolev.q_sequence(30, p) == sobolev.q_from_ratios(a[:31])
        lim = sobolev.a_limit(p)
        c = float(p.c)
        assert abs(c * lim * lim - (1 + float(p.eta) * c) * lim + 1) <= 1e-14

    gaps = {}
    for p in GRID:
        if p.c == H:
            lim = sobolev.a_limit(p)
            gaps[p.beta] = abs(float(sobolev.a_sequence(40, p)[40]) - lim)
    failing = {str(b): g for b, g in gaps.items() if not g < 1e-10}

    for p in GRID:
        deg = SobolevParams(p.beta, p.c, 0)
        assert all(v == 1 for v in sobolev.a_sequence(30, deg))
        assert all(v == 1 for v in sobolev.q_sequence(30, deg))
        assert sobolev.a_limit(deg) == 1.0
        assert all(v(Fraction(1)) == 1 for v in sobolev.q_polynomials(30, p))

    assert not failing, f"|a_40 - a| at c = 1/2 by beta: {failing}"


@pytest.mark.criterion(6, "beta = 1 closed form vs 80-term series <= 1e-9, gamma = delta = 1/2 (< 5 s)")
def test_gm_beta_one():
    p = SobolevParams(1, H, 1)
    with Stopwatch() as sw:
        for w in omegas(p):
            for x in XS:
                closed = genfun.gm_closed_beta1(x, w, p)
                assert abs(closed - genfun.gm_truncated(x, w, p, 80)) <= 1e-9, (x, w)
        k = genfun.gf_constants(p)
        assert abs(k.gamma - 0.5) <= 1e-13
        assert abs(k.delta - 0.5) <= 1e-13
    assert sw.elapsed < 5


@pytest.mark.criterion(7, "beta != 1 closed form, argument identity, lambda = 0 degeneration")
def test_gm_general():
    for beta in (2, Fraction(5, 2)):
        p = SobolevParams(beta, H, 1)
        for w in omegas(p):
            for x in XS:
                closed = genfun.gm_closed_general(x, w, p)
                assert abs(closed - genfun.gm_truncated(x, w, p, 80)) <= 1e-9, (beta, x, w)
            w1, w2 = genfun.omega_substitutions(w, p)
            assert abs((w2 - w1) / (1 + w2) - genfun.hyp_argument(w, p)) <= 1e-13
        deg = SobolevParams(beta, H, 0)
        for w in omegas(deg):
            for x in XS:
                classical = genfun.meixner_gf_closed(x, w, deg.meixner)
                assert abs(genfun.gm_closed(x, w, deg) - classical) <= 1e-12


@pytest.mark.criterion(8, "h_n recurrence vs Taylor coefficients of F, n <= 40 at 30 digits")
def test_F_coefficients():
    for p in (SobolevParams(2, H, 1), SobolevParams(Fraction(5, 2), H, 1), SobolevParams(3, Fraction(1, 3), 2)):
        h, conv = genfun.F_coefficients(40, p, dps=30)
        with mpmath.workdps(30):
            for u, v in zip(conv, h):
                ref = hypergeom.to_mpf(v)
                assert abs(u - ref) <= 1e-10 * abs(ref)
        assert genfun.F_closed(0.0, p) == 1
        deg = SobolevParams(p.beta, p.c, 0)
        expected = [hypergeom_binomial(p.beta - 1, n) for n in range(41)]
        assert genfun.F_taylor_coefficients(40, deg, exact=True) == expected


@pytest.mark.criterion(9, "Pfaff-Kummer on a seeded grid, bilateral summation and degenerations")
def test_hypergeometric_identities():
    grid = pfaff_kummer_grid(seed=0, size=50)
    assert len(grid) == 50
    for a, b, c0, z in grid:
        left, right = hypergeom.pfaff_kummer_check(a, b, c0, z)
        assert abs(left - right) <= 1e-12 * max(1.0, abs(left)), (a, b, c0, z)
    for (a, b, c0, y, z), _ in bilateral_constellations():
        left, right = hypergeom.bilateral_2f1_check(a, b, c0, y, z)
        assert abs(left - right) <= 1e-10
        left, right = hypergeom.bilateral_2f1_check(a, b, c0, 0.0, z)
        assert abs(left - right) <= 1e-10
        assert abs(left - hypergeom.hyp2f1(c0 - a, c0 - b, c0, z)) <= 1e-10
        left, right = hypergeom.bilateral_2f1_check(a, b, c0, y, 0.0)
        assert abs(left - right) <= 1e-10
        assert abs(right - hypergeom.hyp2f1(a, b, c0, y)) <= 1e-10


@pytest.mark.criterion(10, "Laguerre bridge: orthogonality, G_L, monotone limits, n = 1 error (< 60 s)")
def test_laguerre_bridge():
    with Stopwatch() as sw:
        for p in LAGUERRE:
            fam = laguerre.laguerre_sobolev_family(10, p)
            for j in range(11):
                for i in range(j):
                    assert laguerre.laguerre_sobolev_inner(fam[i], fam[j], p) == 0
            at = p.a_tilde
            for w in (-0.25 * at, 0.1 * at, 0.25 * at):
                for x in XS:
                    assert abs(laguerre.gl_closed(x, w, p) - laguerre.gl_truncated(x, w, p, 80)) <= 1e-9

            for n in range(7):
                for x in (1, 2):
                    e = laguerre.meixner_laguerre_limit_check(n, x, p.alpha, DYADIC)
                    assert laguerre.is_monotone_decreasing(e), (p, n, x, e)
                    e = laguerre.sobolev_limit_check(n, x, p, DYADIC)
                    assert laguerre.is_monotone_decreasing(e), (p, n, x, e)
                    assert e[-1] < 1e-2, (p, n, x, e[-1])
                e = laguerre.q_limit_check(n, p, DYADIC)
                assert laguerre.is_monotone_decreasing(e), (p, n, e)
            assert laguerre.is_monotone_decreasing(laguerre.gf_limit_check(1, 0.1, p, DYADIC))

            # n = 1: the error is exactly (alpha + 1)(1 - c), checked in rationals
            x = Fraction(2)
            for c in DYADIC:
                err = c * meixner.meixner_family(1, MeixnerParams(p.alpha + 1, c))[1](x / (1 - c))
                err -= laguerre.laguerre_poly(1, p.alpha)(x)
                assert abs(err) == (p.alpha + 1) * (1 - c)
                err = c * sobolev.sobolev_family(1, p.sobolev_at(c))[1](x / (1 - c))
                err -= laguerre.laguerre_sobolev_poly(1, p)(x)
                assert abs(err) == (p.alpha + 1) * (1 - c)
    assert sw.elapsed < 60
