import sys
from pathlib import Path

import pytest

from tetrahedral.path_algebra import (AdmissibilityError, FreeElement, Presentation, normal_form,
                                      quotient_basis, stabilization_check, tetrahedral_relations, word)
from tetrahedral.quiver import Arrow, Quiver
from tetrahedral.scalars import Field

sys.path.insert(0, str(Path(__file__).parent))
from oracles import quotient_dimension  # noqa: E402


def test_relation_count_and_shape():
    pres = tetrahedral_relations(2, 1)
    assert len(pres.relations) == 24
    assert pres.length_bound == 6
    for r in pres.relations:
        assert r.endpoints() is not None


def test_gamma_relation_carries_lambda_term():
    fld = Field.prime()
    pres = tetrahedral_relations(3, 5, fld)
    q = pres.quiver
    expected = (word(q, fld, "gamma", "delta") - word(q, fld, "beta", "epsilon")
                - word(q, fld, *(("beta", "rho", "omega") * 2), "beta", "epsilon", coeff=5))
    assert expected in pres.relations


def test_m_below_two_rejected():
    with pytest.raises(ValueError):
        tetrahedral_relations(1, 0)


def test_free_element_arithmetic():
    fld = Field.prime(7)
    q = tetrahedral_relations(2).quiver
    a = word(q, fld, "delta", "eta")
    b = word(q, fld, "nu", "omega")
    assert (a - b) + b == a
    assert not (a - a)
    assert (a * word(q, fld, "gamma")) == word(q, fld, "delta", "eta", "gamma")
    assert a.scale(3).terms[q.path("delta", "eta")] == 3


@pytest.mark.parametrize("lam", [0, 1])
def test_quotient_dimension_agrees_with_independent_oracle(lam):
    # the oracle spans the ideal by all two-sided multiples and ranks blocks
    # with its own elimination; the expected value 36m is the dimension formula
    pres = tetrahedral_relations(2, lam)
    dim, leftover = quotient_dimension(pres, 7)
    assert leftover == 0
    assert dim == quotient_basis(pres).dim == 72


def test_normal_form_of_relations_and_long_paths():
    pres = tetrahedral_relations(2, 1)
    alg = quotient_basis(pres)
    fld = pres.field
    for r in pres.relations:
        assert normal_form(alg, r) == {}
    long = word(pres.quiver, fld, *(("delta", "eta", "gamma") * 2), "delta")
    assert normal_form(alg, long) == {}


def test_basis_is_graded_by_vertex():
    alg = quotient_basis(tetrahedral_relations(2, 0))
    for v in alg.vertices:
        assert len(alg.indices(source=v)) == 12


def test_stabilization_with_more_headroom():
    rep = stabilization_check(tetrahedral_relations(2, 1))
    assert rep["stable"] and rep["dim"] == rep["dim_next"] == 72


def test_non_admissible_presentation_is_rejected():
    fld = Field.prime()
    q = Quiver([1], [Arrow("a", 1, 1)])
    pres = Presentation(q, [], fld, 3)
    with pytest.raises(AdmissibilityError):
        quotient_basis(pres)


def test_wrong_length_bound_is_rejected():
    pres = tetrahedral_relations(2, 1)
    short = Presentation(pres.quiver, pres.relations, pres.field, 4, m=2, lam=1)
    with pytest.raises(AdmissibilityError):
        quotient_basis(short)


def test_rationals_agree_with_prime_field():
    a = quotient_basis(tetrahedral_relations(2, 1, Field.rational()))
    b = quotient_basis(tetrahedral_relations(2, 1))
    assert [str(p) for p in a.basis] == [str(p) for p in b.basis]
