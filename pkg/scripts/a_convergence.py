"""How fast a_n approaches its limit, for a few beta at fixed c and lambda.

For beta = 1 the gap shrinks geometrically; otherwise n * |a_n - a| settles
to a constant.  Prints CSV: beta, n, gap, n_times_gap.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from meixner_sobolev.sobolev import SobolevParams, a_limit, a_sequence


@dataclass(frozen=True)
class ConvergenceConfig:
    c: Fraction = Fraction(1, 2)
    lam: Fraction = Fraction(1)
    betas: tuple[Fraction, ...] = field(default=(Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)))
    checkpoints: tuple[int, ...] = (5, 10, 20, 40, 80, 160, 320)


def run(cfg: ConvergenceConfig, out=sys.stdout) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["beta", "n", "gap", "n_times_gap"])
    for beta in cfg.betas:
        p = SobolevParams(beta, cfg.c, cfg.lam)
        a = a_sequence(max(cfg.checkpoints), p)
        lim = a_limit(p)
        for n in cfg.checkpoints:
            gap = abs(float(a[n]) - lim)
            writer.writerow([str(beta), n, repr(gap), repr(n * gap)])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--c", type=Fraction, default=ConvergenceConfig.c)
    ap.add_argument("--lambda", dest="lam", type=Fraction, default=ConvergenceConfig.lam)
    args = ap.parse_args(argv)
    run(ConvergenceConfig(c=args.c, lam=args.lam))
    return 0


if __name__ == "__main__":
    sys.exit(main())
