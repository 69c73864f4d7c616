import pytest

from tetrahedral.lemmas import (PHI_ARROWS, PHI_VERTICES, long_path_check, path_lemma_suite,
                                phi_check)
from tetrahedral.quiver import tetrahedral_quiver

from conftest import build


@pytest.mark.parametrize("m,lam", [(2, 0), (2, 1), (3, 1), (2, 5)])
def test_path_identities_have_no_violations(m, lam):
    _, alg, _, _, _ = build(m, lam)
    for rep in path_lemma_suite(alg, m, lam):
        assert rep.violations == [], rep.name
        assert rep.checked > 0


def test_check_counts_at_m2(lam21):
    _, alg, _, _, _ = lam21
    assert [r.checked for r in path_lemma_suite(alg, 2, 1)] == [18, 27, 24, 1440]


def test_path_check_detects_a_wrong_algebra(lam21):
    # checking the m = 2 algebra against m = 3 expectations must fail
    _, alg, _, _, _ = lam21
    assert not long_path_check(alg, 3).ok


def test_phi_respects_the_quiver():
    q = tetrahedral_quiver().quiver
    for a in q.arrows:
        b = q.arrow[PHI_ARROWS[a.name]]
        assert (PHI_VERTICES[a.source], PHI_VERTICES[a.target]) == (b.source, b.target)


@pytest.mark.parametrize("lam", [0, 1])
def test_phi_is_an_order_three_automorphism(lam):
    pres, alg, _, _, _ = build(2, lam)
    rep = phi_check(alg, pres.relations, 2, lam)
    assert rep.ok
