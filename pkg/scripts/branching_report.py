#!/usr/bin/env python3
"""Print the half-spin branching identifications for the three exceptional
cases: the defining orthogonal representation, the ambient even orthogonal
rank, and the identified constituent of both half-spin restrictions.

Run:  python scripts/branching_report.py
"""

import sys
import time

from cliffdegen.plethysm import verify_plethysm


def main():
    print(f"{'case':5} {'ambient':>9} {'defining':>9} {'constituent dim':>16} "
          f"{'highest weight':>22} {'= V_rho?':>9} {'secs':>6}")
    for case in ("g2", "c3", "f4"):
        t0 = time.time()
        rep = verify_plethysm(case)
        dt = time.time() - t0
        cons = rep["constituents"]["+"][0]
        hw = "(" + ", ".join(cons["highest_weight"]) + ")"
        print(
            f"{rep['type']:5} D_{rep['ell']:<7} {rep['defining_dim']:>9} "
            f"{cons['dim']:>16} {hw:>22} {str(rep['matches_rho_module']):>9} {dt:>6.1f}"
        )
        if not rep["halfspin_agree"]:
            print(f"  !! half-spin restrictions disagree for {case}")
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
