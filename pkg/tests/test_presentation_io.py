import pytest

from tetrahedral.families import build_omega, build_sigma, gamma_presentation
from tetrahedral.path_algebra import tetrahedral_relations, word
from tetrahedral.presentation_io import (PresentationSyntaxError, emit_presentation,
                                         parse_presentation)
from tetrahedral.scalars import Field


@pytest.mark.parametrize("pres", [
    tetrahedral_relations(2, 1),
    tetrahedral_relations(3, 5, Field.rational()),
    tetrahedral_relations(2, -3, Field.rational()),
    build_sigma(2, 3),
    build_omega(2),
    gamma_presentation(),
], ids=["lambda21", "lambda35q", "lambda_neg_q", "sigma", "omega", "gamma"])
def test_round_trip(pres):
    text = emit_presentation(pres)
    assert parse_presentation(text) == pres
    assert emit_presentation(parse_presentation(text)) == text


def _header(m):
    text = emit_presentation(tetrahedral_relations(m, 1))
    return text.split("relation:")[0]


def test_parse_gamma_relation_with_lambda():
    # (beta rho omega) appears twice: this is the relation at m = 3
    pres = parse_presentation(_header(3) + "relation: gamma*delta - beta*epsilon"
                              " - l*(beta*rho*omega)*(beta*rho*omega)*beta*epsilon\n")
    assert pres.relations[0] == tetrahedral_relations(3, 1).relations[2]


def test_parse_equation_form_and_powers():
    pres = parse_presentation(_header(2) + "relation: gamma*delta = beta*epsilon"
                              " + l*(beta*rho*omega)^1*beta*epsilon\n")
    assert pres.relations[0] == tetrahedral_relations(2, 1).relations[2]
    pres = parse_presentation(_header(2) + "relation: (delta*eta*gamma)^2 - 1/2*(nu*mu*alpha)^2\n")
    fld, q = pres.field, pres.quiver
    expected = (word(q, fld, *(("delta", "eta", "gamma") * 2))
                - word(q, fld, *(("nu", "mu", "alpha") * 2), coeff=fld.parse_value("1/2")))
    assert pres.relations[0] == expected


def test_whitespace_and_comments_are_ignored():
    text = _header(2) + "  relation :  gamma *delta-  beta* epsilon  # comment\n\n# note\n"
    pres = parse_presentation(text)
    assert len(pres.relations) == 1


@pytest.mark.parametrize("body,col,fragment", [
    ("delta*alpha", 17, "does not compose"),
    ("delta*foo", 17, "unknown arrow"),
    ("2*+", 13, "unexpected '+'"),
    ("(delta*eta)^2", 23, "non-cyclic"),
    ("gamma*delta $", 23, "unexpected character"),
    ("gamma*delta - gamma*delta", 11, "relation is zero"),
    ("gamma*delta - alpha", 11, "share source and target"),
    ("2", 11, "term has no path"),
])
def test_syntax_errors_report_position(body, col, fragment):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(_header(2) + f"relation: {body}\n")
    assert info.value.line == 19
    assert info.value.col == col
    assert fragment in info.value.message


def test_header_errors():
    with pytest.raises(PresentationSyntaxError, match="missing 'vertices'"):
        parse_presentation("m: 2\n")
    with pytest.raises(PresentationSyntaxError, match="unknown key"):
        parse_presentation("colour: red\n")
    with pytest.raises(PresentationSyntaxError, match="not prime"):
        parse_presentation("field: fp:4\nvertices: 1\nlength_bound: 1\n")
    with pytest.raises(PresentationSyntaxError, match="no lambda"):
        parse_presentation("vertices: 1 2\narrow a: 1 -> 2\nlength_bound: 2\nrelation: l*a\n")


def test_length_bound_defaults_to_3m():
    text = _header(2).replace("length_bound: 6\n", "")
    assert parse_presentation(text + "relation: gamma*delta\n").length_bound == 6
