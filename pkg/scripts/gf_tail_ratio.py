"""Measured decay rate of q_n S_n(x) against the two candidate radii a and a c.

Positive integer x only sees the singularity at w = a, x = 0 only the pole
at w = 1, and other x see w = a c.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from meixner_sobolev.genfun import gf_constants, qs_coefficients
from meixner_sobolev.sobolev import SobolevParams


@dataclass(frozen=True)
class TailConfig:
    beta: Fraction = Fraction(1)
    c: Fraction = Fraction(1, 2)
    lam: Fraction = Fraction(1)
    N: int = 160
    xs: tuple[Fraction, ...] = (Fraction(0), Fraction(3), Fraction(7, 3), Fraction(5, 2))


def run(cfg: TailConfig, out=sys.stdout) -> None:
    p = SobolevParams(cfg.beta, cfg.c, cfg.lam)
    a = float(gf_constants(p).a)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "measured_ratio", "one_over_a", "one_over_ac"])
    for x in cfg.xs:
        t = qs_coefficients(x, p, cfg.N)
        writer.writerow([str(x), repr(float(t[-1] / t[-2])), repr(1 / a), repr(1 / (a * float(cfg.c)))])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", type=Fraction, default=TailConfig.beta)
    ap.add_argument("--c", type=Fraction, default=TailConfig.c)
    ap.add_argument("--lambda", dest="lam", type=Fraction, default=TailConfig.lam)
    ap.add_argument("--N", type=int, default=TailConfig.N)
    args = ap.parse_args(argv)
    run(TailConfig(args.beta, args.c, args.lam, args.N))
    return 0


if __name__ == "__main__":
    sys.exit(main())
