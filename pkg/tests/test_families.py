import pytest

from tetrahedral.algebra import AlgebraMap
from tetrahedral.families import (build_omega, build_sigma, gamma_quotient_check, lambda_family,
                                  omega_corner_check, omega_sigma_iso_check, sample_roots,
                                  scaling_iso_check, sigma_scaling_check, special_biserial_check)
from tetrahedral.path_algebra import quotient_basis, tetrahedral_relations
from tetrahedral.scalars import Field


@pytest.fixture(scope="module")
def omega2():
    return quotient_basis(build_omega(2))


@pytest.fixture(scope="module")
def sigma21():
    return quotient_basis(build_sigma(2, 1))


def test_omega_dimension(omega2):
    assert omega2.dim == 165
    assert [len(omega2.indices(source=v)) for v in omega2.vertices] == [18] * 6 + [19] * 3


@pytest.mark.parametrize("t", [0, 1, 7])
def test_sigma_dimension_is_constant(t):
    alg = quotient_basis(build_sigma(2, t))
    assert alg.dim == 165
    assert [len(alg.indices(source=v)) for v in alg.vertices] == [36, 36, 36, 19, 19, 19]


def test_corner_of_omega_is_lambda0(omega2):
    v = omega_corner_check(2, omega=omega2)
    assert v.ok and v.rank == 72


def test_omega_to_sigma_iso(omega2, sigma21):
    v = omega_sigma_iso_check(2, omega=omega2, sigma1=sigma21)
    assert v.ok and v.rank == 165


def test_special_biserial():
    assert special_biserial_check(build_sigma(2, 0)).holds
    rep = special_biserial_check(tetrahedral_relations(2, 1))
    assert not rep.holds and rep.witnesses


def test_sample_roots_round_trip():
    fld = Field.prime()
    pairs = sample_roots(fld, 3, 4, seed=2)
    assert len({t for _, t in pairs}) == 4
    assert all(fld.pow(a, 3) == t for a, t in pairs)


def test_lambda_scaling_isomorphisms():
    fld = Field.prime()
    fam = lambda_family(2, 1, fld)
    cache = {}
    for a, t in sample_roots(fld, 3, 3, seed=0):
        assert scaling_iso_check(fam, t, a, 2, cache).ok


def test_scaling_needs_a_root():
    fam = lambda_family(2, 1)
    with pytest.raises(ValueError):
        scaling_iso_check(fam, 5, 2, 2)


def test_sigma_scaling_isomorphisms(sigma21):
    fld = Field.prime()
    cache = {fld.one: sigma21}
    for b, t in sample_roots(fld, 8, 3, seed=1):
        assert sigma_scaling_check(2, t, b, fld, cache).ok


def test_identity_on_arrows_is_not_an_iso_between_different_members():
    # Lambda(2,1) and Lambda(2,t) are not related by the identity on arrows
    fld = Field.prime()
    a, b = quotient_basis(tetrahedral_relations(2, 1)), quotient_basis(tetrahedral_relations(2, 8))
    amap = AlgebraMap(a, b, {x.name: b.arrow(x.name) for x in a.quiver.arrows})
    assert not amap.check(tetrahedral_relations(2, 1).relations).is_homomorphism


@pytest.mark.parametrize("lam", [0, 1])
def test_gamma_quotient(lam):
    rep = gamma_quotient_check(2, lam)
    assert (rep.vertices, rep.arrows, rep.dim) == (6, 8, 18)
    assert rep.quiver_match and rep.relations_match
