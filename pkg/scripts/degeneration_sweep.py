#!/usr/bin/env python3
"""Sweep one-parameter families of quadratic forms and tabulate how the
special fibre of the even Clifford algebra degenerates: determinant of the
family, radical dimension and nilpotency index at t = 0, and the
semisimplicity re-check away from 0.

Run:  python scripts/degeneration_sweep.py [--max-m 7]
"""

import argparse
import sys
import time

from cliffdegen.degeneration import QuadraticFamily, certify_specialization
from cliffdegen.rings import Poly


def families(max_m):
    t = Poly.t()
    for m in range(3, max_m + 1, 2):
        yield f"diag(1,..,1,t)     m={m}", QuadraticFamily.diagonal([1] * (m - 1) + [t])
        yield f"diag(1,..,1,t,t)   m={m}", QuadraticFamily.diagonal([1] * (m - 2) + [t, t])
        yield f"diag(t,..,t)       m={m}", QuadraticFamily.diagonal([t] * m)
        yield f"diag(1,..,1,t^2)   m={m}", QuadraticFamily.diagonal([1] * (m - 1) + [t * t])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=7)
    args = ap.parse_args()
    print(f"{'family':26} {'dim':>5} {'radical':>8} {'nil_idx':>8} {'generic_ok':>11} {'secs':>6}")
    for label, fam in families(args.max_m):
        t0 = time.time()
        w = certify_specialization(fam)
        dt = time.time() - t0
        print(
            f"{label:26} {w.special_fiber.dim:>5} {w.radical.dimension:>8} "
            f"{w.radical.nilpotency_index:>8} {str(w.generic_radical_dim == 0):>11} {dt:>6.1f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
