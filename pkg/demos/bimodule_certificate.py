"""Certify that the fourth bimodule syzygy of Lambda(2,1) is the algebra itself.

Prints the ranks of d0, d, R and S, the exactness verdicts, and which of
the displayed generators psi_i had to be corrected by a rad^2 term.

Run:  python3 demos/bimodule_certificate.py [lambda]
"""

import sys

from tetrahedral.algebra import AlgebraMap, gram_from_functional, omega_functional
from tetrahedral.bimodule import resolution_certificate, resolution_relations
from tetrahedral.explicit_basis import paper_basis_model
from tetrahedral.modules import periodicity_report
from tetrahedral.path_algebra import quotient_basis, tetrahedral_relations
from tetrahedral.quiver import tetrahedral_quiver


def main(lam):
    alg = quotient_basis(tetrahedral_relations(2, lam))
    model = paper_basis_model(2, lam)
    iso = AlgebraMap(alg, model, {a.name: model.arrow(a.name) for a in alg.quiver.arrows})
    gram = gram_from_functional(alg, omega_functional(alg, model, iso))
    tops = {}
    for i in alg.vertices:
        rep = periodicity_report(alg, i, 4, stop_at_period=False)
        for n in (1, 2, 3):
            tops[(n, i)] = rep.top_vectors[n]
    cert = resolution_certificate(alg, tetrahedral_quiver(),
                                  resolution_relations(2, lam, alg.field), gram, tops)
    print("dims        ", cert.dims)
    print("ranks       ", cert.ranks)
    print("composites  ", cert.chain)
    print("exact       ", cert.exact)
    print("R(psi_i)=0 for the displayed psi_i", cert.r_psi_zero)
    print("psi_i corrected                   ", cert.psi_corrected)
    print("theta rank", cert.theta_rank, "central", cert.theta_central)
    print("Omega^4 of A is A:", cert.omega4_iso)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 1)
