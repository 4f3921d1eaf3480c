"""Errors of the c -> 1 limits along c = 1 - 2^-k, as CSV on stdout.

    python scripts/limit_sweep.py --alpha 1 --lambda-t 1 --max-n 6
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from meixner_sobolev import laguerre


@dataclass(frozen=True)
class SweepConfig:
    alpha: Fraction = Fraction(1)
    lambda_t: Fraction = Fraction(1)
    x: Fraction = Fraction(1)
    omega: float = 0.1
    max_n: int = 6
    k_min: int = 4
    k_max: int = 12


def run(cfg: SweepConfig, out=sys.stdout) -> bool:
    p = laguerre.LaguerreSobolevParams(cfg.alpha, cfg.lambda_t)
    cs = laguerre.dyadic_c_sequence(cfg.k_min, cfg.k_max)
    ks = range(cfg.k_min, cfg.k_max + 1)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["series", "n", "k", "c", "error"])
    all_monotone = True
    for n in range(cfg.max_n + 1):
        for name, errs in (
            ("meixner-laguerre", laguerre.meixner_laguerre_limit_check(n, cfg.x, p.alpha, cs)),
            ("sobolev", laguerre.sobolev_limit_check(n, cfg.x, p, cs)),
            ("q", laguerre.q_limit_check(n, p, cs)),
        ):
            all_monotone &= laguerre.is_monotone_decreasing(errs)
            for k, c, e in zip(ks, cs, errs):
                writer.writerow([name, n, k, f"{c.numerator}/{c.denominator}", repr(e)])
    errs = laguerre.gf_limit_check(cfg.x, cfg.omega, p, cs)
    all_monotone &= laguerre.is_monotone_decreasing(errs)
    for k, c, e in zip(ks, cs, errs):
        writer.writerow(["gf", "", k, f"{c.numerator}/{c.denominator}", repr(e)])
    return all_monotone


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=Fraction, default=SweepConfig.alpha)
    ap.add_argument("--lambda-t", type=Fraction, default=SweepConfig.lambda_t)
    ap.add_argument("--x", type=Fraction, default=SweepConfig.x)
    ap.add_argument("--omega", type=float, default=SweepConfig.omega)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--k-min", type=int, default=SweepConfig.k_min)
    ap.add_argument("--k-max", type=int, default=SweepConfig.k_max)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.alpha, args.lambda_t, args.x, args.omega, args.max_n, args.k_min, args.k_max)
    monotone = run(cfg)
    print(f"# all series monotone: {monotone}", file=sys.stderr)
    return 0 if monotone else 1


if __name__ == "__main__":
    sys.exit(main())
