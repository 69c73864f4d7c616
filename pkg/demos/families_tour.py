"""The blowup Omega(2), the family Sigma(2,t), and the maps between them."""

from tetrahedral.families import (build_omega, build_sigma, gamma_quotient_check, lambda_family,
                                  omega_corner_check, omega_sigma_iso_check, sample_roots,
                                  scaling_iso_check, special_biserial_check)
from tetrahedral.path_algebra import quotient_basis
from tetrahedral.scalars import Field

fld = Field.prime()
omega = quotient_basis(build_omega(2, fld))
print("dim Omega(2) =", omega.dim)
for t in (0, 1, 5):
    print(f"dim Sigma(2,{t}) =", quotient_basis(build_sigma(2, t, fld)).dim)
print("e Omega(2) e = Lambda(2,0):", omega_corner_check(2, fld, omega).ok)
print("Omega(2) -> Sigma(2,1) is an isomorphism:", omega_sigma_iso_check(2, fld, omega).ok)
print("Sigma(2,0) special biserial:", special_biserial_check(build_sigma(2, 0, fld)).holds)
fam = lambda_family(2, 1, fld)
for a, t in sample_roots(fld, 3, 3, seed=0):
    print(f"phi_t for t = {t} (a = {a}):", scaling_iso_check(fam, t, a, 2).ok)
g = gamma_quotient_check(2, 1, fld)
print("Gamma:", g.vertices, "vertices,", g.arrows, "arrows, dim", g.dim)
