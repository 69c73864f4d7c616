import pytest

from tetrahedral.modules import (hom_space, is_isomorphic, periodicity_report, projective_cover,
                                 projective_module, rad_mod_soc, simple_module, syzygy, zero_module)


def test_projective_and_simple_modules(lam21):
    pres, alg, _, _, _ = lam21
    for v in alg.vertices:
        p = projective_module(alg, v)
        assert p.dim == 12
        assert p.check_relations(pres.relations) == []
        assert p.generator_count() == 1
        s = simple_module(alg, v)
        assert s.dim == 1 and s.dim_vector() == [1 if w == v else 0 for w in alg.vertices]


def test_projective_cover_of_radical(lam21):
    _, alg, _, _, _ = lam21
    q = alg.quiver
    for v in alg.vertices:
        om = syzygy(alg, simple_module(alg, v))
        cover = projective_cover(alg, om)
        assert sorted(cover.summands) == sorted(a.target for a in q.outgoing(v))


def test_hom_space_dimensions_match_cartan(lam21):
    _, alg, _, _, _ = lam21
    p1, p2 = projective_module(alg, 1), projective_module(alg, 2)
    # Hom(P_i, P_j) = e_j A e_i
    assert len(hom_space(p1, p2)) == len(alg.indices(source=2, target=1))


def test_isomorphism_verdicts(lam21):
    _, alg, _, _, _ = lam21
    s1, s2 = simple_module(alg, 1), simple_module(alg, 2)
    assert is_isomorphic(s1, s1) == "yes"
    assert is_isomorphic(s1, s2) == "no"
    assert is_isomorphic(zero_module(alg), zero_module(alg)) == "yes"


def test_syzygy_of_projective_is_zero(lam21):
    _, alg, _, _, _ = lam21
    assert syzygy(alg, projective_module(alg, 3)).dim == 0


@pytest.mark.parametrize("v", [1, 4])
def test_period_four_sequence(lam21, v):
    _, alg, _, _, _ = lam21
    rep = periodicity_report(alg, v, 8)
    assert rep.period_found == 4
    assert rep.syzygy_dims == [1, 11, 13, 11, 1]
    assert rep.verdicts[:3] == ["no", "no", "no"]


def test_singular_case_grows(lam20):
    _, alg, _, _, _ = lam20
    rep = periodicity_report(alg, 1, 6)
    assert rep.period_found is None
    assert rep.top_dims[2] == 3


def test_rad_mod_soc_pairs(lam20):
    _, alg, _, _, _ = lam20
    for i in (1, 3, 5):
        assert is_isomorphic(rad_mod_soc(alg, i), rad_mod_soc(alg, i + 1)) == "yes"
    assert is_isomorphic(rad_mod_soc(alg, 1), rad_mod_soc(alg, 3)) == "no"


def test_max_n_must_reach_four(lam21):
    _, alg, _, _, _ = lam21
    with pytest.raises(ValueError):
        periodicity_report(alg, 1, 3)
