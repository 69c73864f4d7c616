import pytest

from tetrahedral.bimodule import (BimoduleMap, build_d, build_R, build_S, casimir_pairs,
                                  multiplication, pi_embed, psi_elements, relation_assignment,
                                  resolution_certificate, resolution_relations, tensor_length)
from tetrahedral.modules import periodicity_report
from tetrahedral.path_algebra import normal_form, word
from tetrahedral.quiver import tetrahedral_quiver

from conftest import build


def _ext_tops(alg):
    tops = {}
    for i in alg.vertices:
        rep = periodicity_report(alg, i, 4, stop_at_period=False)
        for n in (1, 2, 3):
            tops[(n, i)] = rep.top_vectors[n]
    return tops


@pytest.fixture(scope="module")
def cert21(lam21):
    _, alg, _, _, gram = lam21
    rels = resolution_relations(2, 1, alg.field)
    return resolution_certificate(alg, tetrahedral_quiver(), rels, gram, _ext_tops(alg))


def test_resolution_relations_hold_in_the_algebra(lam21):
    _, alg, _, _, _ = lam21
    assert all(normal_form(alg, r) == {} for r in resolution_relations(2, 1, alg.field))


def test_p0_p1_dimensions(lam21):
    _, alg, _, _, _ = lam21
    p1, p0, d = build_d(alg)
    # P0 = sum_i Ae_i (x) e_iA has dim sum_i 12*12, P1 has one summand per arrow
    assert p0.dim == 6 * 12 * 12
    assert len(p1.summands) == 12 and p1.dim == 12 * 12 * 12
    assert d.is_bimodule_map()


def test_pi_is_additive_and_respects_d(lam21):
    _, alg, _, _, _ = lam21
    fld = alg.field
    p1, p0, d = build_d(alg)
    q = alg.quiver
    x = word(q, fld, "delta", "eta") - word(q, fld, "nu", "omega")
    # d(pi(x)) = x (x) e - e (x) x, which is zero in P0 for a relation
    assert not d.apply(pi_embed(alg, p1, x))


def test_certificate_ranks(cert21):
    assert cert21.dims == {"A": 72, "P0": 864, "P1": 1728, "P2": 1728, "P3": 864}
    assert cert21.ranks == {"d0": 72, "d": 792, "R": 936, "S": 792}
    assert cert21.kernel_dims["S"] == 72


def test_certificate_chain_and_exactness(cert21):
    assert all(cert21.chain.values())
    assert all(cert21.exact.values())
    assert all(cert21.s_xi_zero.values())
    assert cert21.theta_central and cert21.theta_rank == 72
    assert cert21.minimal and cert21.omega4_iso


def test_displayed_psi_fails_at_two_and_five(cert21):
    # with lambda != 0 the displayed generators need a rad^2 correction
    assert cert21.r_psi_zero == {1: True, 2: False, 3: True, 4: True, 5: False, 6: True}


def test_psi_corrections_lie_in_rad_squared(lam21):
    _, alg, _, _, gram = lam21
    tq = tetrahedral_quiver()
    p1, _, _ = build_d(alg)
    rels = resolution_relations(2, 1, alg.field)
    p2, R = build_R(alg, p1, tq, relation_assignment(tq, rels))
    p3, S, psi = build_S(alg, p2, tq, R, casimir_pairs(alg, gram))
    fld = alg.field
    for k, v in enumerate(alg.vertices):
        diff = {i: fld.sub(S.images[k].get(i, 0), psi[v].get(i, 0))
                for i in set(S.images[k]) | set(psi[v])}
        assert all(tensor_length(p2, i) >= 2 for i, c in diff.items() if c)
        assert not R.apply(S.images[k])


def test_uncorrected_certificate_breaks_the_chain(lam21):
    _, alg, _, _, gram = lam21
    rels = resolution_relations(2, 1, alg.field)
    cert = resolution_certificate(alg, tetrahedral_quiver(), rels, gram, correct_psi=False)
    assert not cert.chain["R.S"]


def test_singular_case_is_a_complex_but_not_exact(lam20):
    _, alg, _, _, gram = lam20
    rels = resolution_relations(2, 0, alg.field)
    cert = resolution_certificate(alg, tetrahedral_quiver(), rels, gram, _ext_tops(alg))
    assert all(cert.chain.values())
    assert all(cert.r_psi_zero.values())
    assert not cert.exact["P1"]
    assert not cert.omega4_iso


def test_multiplication_of_generators(lam21):
    _, alg, _, _, _ = lam21
    _, p0, _ = build_d(alg)
    assert multiplication(alg, p0, p0.gen(0)) == alg.idempotent(alg.vertices[0])
