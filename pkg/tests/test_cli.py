import subprocess
import sys

import pytest

from tetrahedral.cli import (ALL_CHECKS, UsageError, VerificationConfig, main, parse_checks,
                             run_verify)
from tetrahedral.families import build_sigma
from tetrahedral.presentation_io import emit_presentation


def _report(**kw):
    return run_verify(VerificationConfig(**kw))


def test_parse_checks_aliases_and_order():
    assert parse_checks("all") == ALL_CHECKS
    assert parse_checks("symmetry,lemmas4,dims") == ("dims", "symmetry", "lemmas")
    with pytest.raises(UsageError):
        parse_checks("dims,nope")
    with pytest.raises(UsageError):
        parse_checks(",")


def test_m2_lambda0_simples_reports_no_period():
    rep = _report(m=2, lam="0", checks=("simples",))
    assert rep.passed
    text = rep.render()
    assert "S_1: period: none <= 8" in text
    assert "Omega2_S_1_generators: 3" in text


def test_m3_dims_and_symmetry():
    rep = _report(m=3, lam="1", checks=("dims", "symmetry"))
    assert rep.passed
    text = rep.render()
    assert "dim: 108" in text
    assert "symmetric: yes" in text and "invertible: yes" in text


def test_report_is_deterministic_and_has_no_timing_by_default():
    a = _report(m=2, lam="3", checks=("families", "simples"), seed=4).render()
    b = _report(m=2, lam="3", checks=("families", "simples"), seed=4).render()
    assert a == b
    assert "seconds" not in a
    assert "seed: 4" in a and "schema: 1" in a


def test_timing_flag_adds_seconds():
    text = _report(checks=("dims",), timing=True).render()
    assert "seconds:" in text


def test_usage_errors():
    with pytest.raises(UsageError):
        _report(m=1)
    with pytest.raises(UsageError):
        _report(field="fp:9")
    with pytest.raises(UsageError):
        _report(lam="x")
    with pytest.raises(UsageError):
        _report(max_n=3)


def test_presentation_file_for_other_quiver(tmp_path):
    path = tmp_path / "sigma.txt"
    path.write_text(emit_presentation(build_sigma(2, 0)))
    rep = _report(presentation=str(path))
    assert rep.passed
    text = rep.render()
    assert "dim: 165" in text
    assert "lemmas: skipped" in text


def test_main_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.txt"
    assert main(["verify", "--checks", "dims", "--out", str(out)]) == 0
    assert "overall: pass" in out.read_text()
    assert main(["verify", "--checks", "bogus"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices: 1\narrow a: 1 -> 1\nlength_bound: 3\n")
    # a loop without relations: the quotient is infinite-dimensional
    assert main(["verify", "--presentation", str(bad), "--checks", "dims"]) == 1
    bad.write_text("vertices: 1\nrelation: a\n")
    assert main(["verify", "--presentation", str(bad)]) == 2
    assert main([]) == 2


def test_failing_check_gives_exit_status_one(tmp_path):
    # a presentation with the wrong length bound fails the dims check
    from tetrahedral.path_algebra import Presentation, tetrahedral_relations
    p = tetrahedral_relations(2, 1)
    short = Presentation(p.quiver, p.relations, p.field, 4, m=2, lam=1, name="short")
    path = tmp_path / "short.txt"
    path.write_text(emit_presentation(short))
    assert main(["verify", "--presentation", str(path), "--checks", "dims"]) == 1


def test_emit_and_module_entry_point(tmp_path):
    out = tmp_path / "lam.txt"
    res = subprocess.run([sys.executable, "-m", "tetrahedral", "emit", "lambda", "--m", "2",
                          "--out", str(out)], capture_output=True, text=True)
    assert res.returncode == 0
    assert out.read_text().startswith("name: Lambda(2,1)")
    res = subprocess.run([sys.executable, "-m", "tetrahedral", "verify", "--presentation", str(out),
                          "--checks", "dims,lemmas"], capture_output=True, text=True)
    assert res.returncode == 0 and "overall: pass" in res.stdout
