"""Shared, session-scoped builds of the algebras used across the suite."""

import functools

import pytest

from tetrahedral.algebra import AlgebraMap, gram_from_functional, omega_functional
from tetrahedral.explicit_basis import paper_basis_model
from tetrahedral.path_algebra import quotient_basis, tetrahedral_relations
from tetrahedral.scalars import Field


@functools.lru_cache(maxsize=None)
def build(m, lam, field_spec="fp:1000003"):
    """``(presentation, quotient algebra, explicit basis model, iso, gram matrix)``."""
    fld = Field.parse(field_spec)
    pres = tetrahedral_relations(m, lam, fld)
    alg = quotient_basis(pres)
    model = paper_basis_model(m, lam, fld)
    iso = AlgebraMap(alg, model, {a.name: model.arrow(a.name) for a in alg.quiver.arrows})
    gram = gram_from_functional(alg, omega_functional(alg, model, iso))
    return pres, alg, model, iso, gram


@pytest.fixture(scope="session")
def lam21():
    return build(2, 1)


@pytest.fixture(scope="session")
def lam20():
    return build(2, 0)


@pytest.fixture(scope="session")
def fp():
    return Field.prime()


@pytest.fixture(scope="session")
def qq():
    return Field.rational()


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance criteria lines after the run."""
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 10):
        if n in RESULTS:
            ok, evidence = RESULTS[n]
            terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {evidence}")
        else:
            terminalreporter.write_line(f"criterion {n}: NOT RUN")
