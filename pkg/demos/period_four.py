"""Syzygies of the simple modules: period four when lambda != 0, growth when lambda = 0.

Run:  python3 demos/period_four.py [m]
"""

import sys

from tetrahedral.modules import periodicity_report
from tetrahedral.path_algebra import quotient_basis, tetrahedral_relations


def table(m, lam, max_n):
    alg = quotient_basis(tetrahedral_relations(m, lam))
    print(f"Lambda({m},{lam}): dim {alg.dim}")
    for i in alg.vertices:
        rep = periodicity_report(alg, i, max_n)
        period = rep.period_found or f"none up to {rep.bound}"
        print(f"  S_{i}: dims {rep.syzygy_dims}  generators {rep.top_dims}  period {period}")


if __name__ == "__main__":
    m = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    table(m, 1, 8)
    table(m, 0, 6)
