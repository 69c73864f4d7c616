"""Batch verification driver and report emission.

``python3 -m tetrahedral verify --m 2 --lambda 1`` builds the higher
tetrahedral algebra, runs the selected checks and writes a key/value
report.  The report is a pure function of the configuration: it contains
no timings unless ``--timing`` is given, so two runs with the same seed
produce identical bytes.  The exit status is 1 when a check fails, 2 on a
usage error and 0 otherwise.

``python3 -m tetrahedral emit`` writes a presentation file for one of the
built-in algebras.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from .algebra import (AlgebraMap, FormError, cartan_matrix, check_form, find_symmetrizing_functional,
                      gram_from_functional, omega_functional, socle_and_radical_series)
from .basis_algebra import BasisAlgebra
from .bimodule import resolution_certificate, resolution_relations
from .families import (build_omega, build_sigma, gamma_quotient_check, lambda_family,
                       omega_corner_check, omega_sigma_iso_check, sample_roots,
                       scaling_iso_check, sigma_scaling_check, special_biserial_check)
from .lemmas import path_lemma_suite, phi_check
from .modules import is_isomorphic, periodicity_report, rad_mod_soc
from .explicit_basis import paper_basis_model
from .path_algebra import AdmissibilityError, Presentation, quotient_basis, tetrahedral_relations
from .presentation_io import PresentationSyntaxError, emit_presentation, parse_presentation
from .quiver import tetrahedral_quiver
from .scalars import Field

SCHEMA_VERSION = 1
ALL_CHECKS = ("dims", "basis-crosscheck", "symmetry", "lemmas", "simples", "bimodule", "families")
CHECK_ALIASES = {"lemmas4": "lemmas", "all": None}


class UsageError(ValueError):
    pass


@dataclass
class VerificationConfig:
    m: int = 2
    lam: str = "1"
    field: str = "fp:1000003"
    checks: tuple = ALL_CHECKS
    max_n: int = 8
    seed: int = 0
    headroom: int = 2
    presentation: str | None = None
    timing: bool = False


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    evidence: list = field(default_factory=list)  # (key, value) pairs
    seconds: float = 0.0
    skipped: bool = False

    @property
    def verdict(self) -> str:
        return "skipped" if self.skipped else ("pass" if self.passed else "FAIL")

    def add(self, key: str, value):
        self.evidence.append((key, value))

    def expect(self, key: str, ok: bool):
        """Record a named sub-verdict and fold it into the check verdict."""
        self.add(key, "yes" if ok else "no")
        self.passed = self.passed and bool(ok)


@dataclass
class Report:
    config: VerificationConfig
    source: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        cfg = self.config
        lines = ["# tetrahedral verification report", f"schema: {SCHEMA_VERSION}", "",
                 "[config]", f"source: {self.source}", f"m: {cfg.m}", f"lambda: {cfg.lam}",
                 f"field: {cfg.field}", f"checks: {','.join(cfg.checks)}",
                 f"max_syzygy: {cfg.max_n}", f"seed: {cfg.seed}", f"headroom: {cfg.headroom}", "",
                 "[summary]"]
        for c in self.checks:
            lines.append(f"{c.name}: {c.verdict}")
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        for c in self.checks:
            lines += ["", f"[check {c.name}]", f"verdict: {c.verdict}"]
            lines += [f"{k}: {_fmt(v)}" for k, v in c.evidence]
            if cfg.timing:
                lines.append(f"seconds: {c.seconds:.2f}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


# ------------------------------------------------------------ shared state


class _Context:
    """Lazily built objects shared between checks."""

    def __init__(self, cfg: VerificationConfig, fld: Field, pres: Presentation, builtin: bool):
        self.cfg, self.fld, self.pres, self.builtin = cfg, fld, pres, builtin
        self.m = pres.m
        self.lam = pres.lam if pres.lam is not None else fld.zero
        self.tetrahedral = builtin or _is_tetrahedral(pres)
        self._alg = self._model = self._gram = None

    @property
    def alg(self) -> BasisAlgebra:
        if self._alg is None:
            self._alg = quotient_basis(self.pres, self.cfg.headroom)
        return self._alg

    @property
    def model(self) -> BasisAlgebra:
        if self._model is None:
            self._model = paper_basis_model(self.m, self.lam, self.fld)
        return self._model

    def model_iso(self) -> AlgebraMap:
        return AlgebraMap(self.alg, self.model,
                          {a.name: self.model.arrow(a.name) for a in self.alg.quiver.arrows})

    @property
    def gram(self):
        if self._gram is None:
            self._gram = gram_from_functional(self.alg, omega_functional(self.alg, self.model,
                                                                         self.model_iso()))
        return self._gram


def _is_tetrahedral(pres: Presentation) -> bool:
    if pres.m is None or pres.m < 2:
        return False
    ref = tetrahedral_quiver().quiver
    return ({(a.name, a.source, a.target) for a in pres.quiver.arrows}
            == {(a.name, a.source, a.target) for a in ref.arrows})


def _needs_tetrahedral(ctx: _Context, res: CheckResult) -> bool:
    if not ctx.tetrahedral:
        res.skipped = True
        res.add("reason", "needs the tetrahedral quiver with an m header")
        return False
    return True


# ------------------------------------------------------------ checks


def check_dims(ctx: _Context, res: CheckResult):
    alg = ctx.alg
    res.add("dim", alg.dim)
    res.add("dim_per_vertex", [len(alg.indices(source=v)) for v in alg.vertices])
    res.add("cartan", cartan_matrix(alg).tolist())
    loewy = socle_and_radical_series(alg)
    res.add("radical_series", [loewy.radical_dims[v] for v in alg.vertices])
    res.add("loewy_length", loewy.loewy_length)
    res.expect("identity_and_associativity", alg.check_identity() and not alg.check_associative())
    res.expect("relations_vanish", not alg.kills(ctx.pres.relations))
    if ctx.tetrahedral:
        res.add("expected_dim", 36 * ctx.m)
        res.expect("dim_is_36m", alg.dim == 36 * ctx.m)


def check_basis_crosscheck(ctx: _Context, res: CheckResult):
    if not _needs_tetrahedral(ctx, res):
        return
    alg, model = ctx.alg, ctx.model
    res.add("quotient_dim", alg.dim)
    res.add("model_dim", model.dim)
    rep = ctx.model_iso().check(ctx.pres.relations)
    res.add("rank", rep.rank)
    res.expect("homomorphism", rep.is_homomorphism)
    res.expect("bijective", rep.is_bijective)
    res.expect("model_associative", not model.check_associative())
    # products of basis paths: one term, except across the exceptional cycles
    two_term = sum(1 for row in model.mult for prod in row.values() if len(prod) > 1)
    worst = max((len(prod) for row in model.mult for prod in row.values()), default=0)
    res.add("two_term_products", two_term)
    res.expect("products_have_at_most_two_terms", worst <= 2)


def check_symmetry(ctx: _Context, res: CheckResult):
    alg = ctx.alg
    if ctx.tetrahedral:
        res.add("functional", "coefficient of the socle elements X_i^m")
        problems = check_form(alg, ctx.gram)
        res.add("problems", problems or "none")
        res.expect("symmetric", not any(p.startswith("asymmetric") for p in problems))
        res.expect("associative", not any(p.startswith("not associative") for p in problems))
        res.expect("invertible", not any(p.startswith("degenerate") for p in problems))
    functional, sols = find_symmetrizing_functional(alg, seed=ctx.cfg.seed)
    res.add("trace_functionals_dim", sols)
    res.expect("generic_trace_functional_nondegenerate", functional is not None)


def check_lemmas(ctx: _Context, res: CheckResult):
    if not _needs_tetrahedral(ctx, res):
        return
    for rep in path_lemma_suite(ctx.alg, ctx.m, ctx.lam):
        res.add(f"{rep.name}: checked", rep.checked)
        res.add(f"{rep.name}: violations", len(rep.violations))
        if rep.violations:
            res.add(f"{rep.name}: first", rep.violations[0])
        res.passed = res.passed and rep.ok
    sym = phi_check(ctx.alg, ctx.pres.relations, ctx.m, ctx.lam)
    res.expect("phi_automorphism", sym.is_homomorphism and sym.is_bijective)
    res.expect("phi_order_three", sym.order_three)
    res.expect("phi_maps_X4_to_X2", sym.maps_x4_to_x2)
    res.expect("phi_exceptional_orbit", sym.exceptional_orbit)


def _cover_shape(q, i):
    """Predicted cover vertices of S_i, Omega S_i, Omega^2 S_i, Omega^3 S_i."""
    out = sorted(a.target for a in q.outgoing(i))
    inc = sorted(a.source for a in q.incoming(i))
    return [[i], out, inc, [i]]


def check_simples(ctx: _Context, res: CheckResult):
    alg, cfg = ctx.alg, ctx.cfg
    q = alg.quiver
    reports = {}
    for i in alg.vertices:
        rep = periodicity_report(alg, i, cfg.max_n, seed=cfg.seed, stop_at_period=True)
        reports[i] = rep
        res.add(f"S_{i}: syzygy_dims", rep.syzygy_dims)
        res.add(f"S_{i}: generators", rep.top_dims)
        res.add(f"S_{i}: period", rep.period_found if rep.period_found else f"none <= {rep.bound}")
    if not ctx.tetrahedral:
        return
    m = ctx.m
    if ctx.lam != ctx.fld.zero:
        want = [1, 6 * m - 1, 6 * m + 1, 6 * m - 1, 1]
        res.add("expected_dims", want)
        for i, rep in reports.items():
            res.expect(f"S_{i}: period_4", rep.period_found == 4)
            res.expect(f"S_{i}: dims", rep.syzygy_dims[:5] == want)
            res.expect(f"S_{i}: covers", [sorted(s) for s in rep.cover_shapes[:4]]
                       == _cover_shape(q, i))
    else:
        for i, rep in reports.items():
            res.expect(f"S_{i}: no_period_up_to_{cfg.max_n}",
                       rep.period_found is None and rep.bound >= cfg.max_n)
        gens = reports[1].top_dims[2] if len(reports[1].top_dims) > 2 else 0
        res.add("Omega2_S_1_generators", gens)
        res.expect("Omega2_S_1_more_than_two_generators", gens > 2)
        for i in (1, 3, 5):
            verdict = is_isomorphic(rad_mod_soc(alg, i), rad_mod_soc(alg, i + 1), seed=cfg.seed)
            res.expect(f"radP_{i}/socP_{i} = radP_{i + 1}/socP_{i + 1}", verdict == "yes")


def check_bimodule(ctx: _Context, res: CheckResult):
    if not _needs_tetrahedral(ctx, res):
        return
    alg = ctx.alg
    tops = {}
    for i in alg.vertices:
        rep = periodicity_report(alg, i, 4, seed=ctx.cfg.seed, stop_at_period=False)
        for n in (1, 2, 3):
            tops[(n, i)] = rep.top_vectors[n]
    rels = resolution_relations(ctx.m, ctx.lam, ctx.fld)
    cert = resolution_certificate(alg, tetrahedral_quiver(), rels, ctx.gram, tops)
    res.add("dims", cert.dims)
    res.add("ranks", cert.ranks)
    res.add("kernel_dims", cert.kernel_dims)
    for k, ok in cert.chain.items():
        res.expect(f"composite {k} = 0", ok)
    # the displayed generators; the certificate uses the corrected ones
    res.add("R(psi_i) = 0 for the displayed psi_i", cert.r_psi_zero)
    res.add("psi_i corrected by a rad^2 term", cert.psi_corrected)
    res.add("S(xi_i) = 0", all(cert.s_xi_zero.values()))
    res.add("exact", cert.exact)
    res.add("theta_rank", cert.theta_rank)
    res.add("theta central", cert.theta_central)
    res.add("ext_multiplicities", {n: sum(v.values()) for n, v in cert.ext_multiplicities.items()})
    res.add("cover minimal (matches Ext^n(S_i, S_j))", cert.minimal)
    res.add("Omega^4 of A is A", cert.omega4_iso)
    if ctx.lam != ctx.fld.zero:
        res.add("expected", "exact, minimal, Omega^4 of A is A")
        res.expect("certificate holds", cert.minimal and cert.omega4_iso
                   and cert.theta_rank == alg.dim == cert.kernel_dims["S"])
    else:
        res.add("expected", "complex but not exact: A is not periodic for lambda = 0")
        res.expect("certificate fails as predicted", not cert.omega4_iso)


def check_families(ctx: _Context, res: CheckResult):
    if not (ctx.builtin or ctx.tetrahedral):
        _needs_tetrahedral(ctx, res)
        return
    m, fld, seed = ctx.m, ctx.fld, ctx.cfg.seed
    omega = quotient_basis(build_omega(m, fld))
    sig = {fld.one: quotient_basis(build_sigma(m, 1, fld))}
    sigma0 = build_sigma(m, 0, fld)
    sig0 = quotient_basis(sigma0)
    res.add("dim Omega(m)", omega.dim)
    res.add("dim Sigma(m,1)", sig[fld.one].dim)
    res.add("dim Sigma(m,0)", sig0.dim)
    res.expect("Sigma(m,0) and Sigma(m,1) have dim Omega(m)",
               sig0.dim == sig[fld.one].dim == omega.dim)
    corner = omega_corner_check(m, fld, omega)
    res.expect("eOmega(m)e = Lambda(m,0)", corner.ok)
    om_sig = omega_sigma_iso_check(m, fld, omega, sig[fld.one])
    res.expect("Omega(m) -> Sigma(m,1) isomorphism", om_sig.ok)
    bis = special_biserial_check(sigma0, sig0)
    res.expect("Sigma(m,0) special biserial", bis.holds)
    lam_bis = special_biserial_check(ctx.pres, ctx.alg)
    res.add("Lambda special biserial", lam_bis.holds)
    if lam_bis.witnesses:
        res.add("Lambda witness", lam_bis.witnesses[0])
    fam = lambda_family(m, 1, fld)
    cache = {}
    for a, t in sample_roots(fld, 3 * (m - 1), 3, seed):
        v = scaling_iso_check(fam, t, a, m, cache)
        res.expect(f"phi_t at t = {fld.to_str(t)}", v.ok)
    for b, t in sample_roots(fld, 8, 3, seed + 1):
        v = sigma_scaling_check(m, t, b, fld, sig)
        res.expect(f"psi_t at t = {fld.to_str(t)}", v.ok)
    gam = gamma_quotient_check(m, ctx.lam, fld)
    res.add("Gamma vertices, arrows, dim", [gam.vertices, gam.arrows, gam.dim])
    res.expect("Gamma quiver and relations", gam.quiver_match and gam.relations_match)


CHECKS = {
    "dims": check_dims,
    "basis-crosscheck": check_basis_crosscheck,
    "symmetry": check_symmetry,
    "lemmas": check_lemmas,
    "simples": check_simples,
    "bimodule": check_bimodule,
    "families": check_families,
}


# ------------------------------------------------------------ driver


def parse_checks(text: str) -> tuple:
    names = []
    for raw in text.split(","):
        name = raw.strip()
        if not name:
            continue
        name = CHECK_ALIASES.get(name, name)
        if name is None:
            names.extend(ALL_CHECKS)
        elif name in CHECKS:
            names.append(name)
        else:
            raise UsageError(f"unknown check {raw.strip()!r}; choose from {', '.join(ALL_CHECKS)}")
    out = tuple(n for n in ALL_CHECKS if n in names)
    if not out:
        raise UsageError("no checks selected")
    return out


def _setup(cfg: VerificationConfig):
    try:
        fld = Field.parse(cfg.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.presentation is not None:
        try:
            with open(cfg.presentation, encoding="utf-8") as fh:
                pres = parse_presentation(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read presentation: {exc}") from None
        except PresentationSyntaxError as exc:
            raise UsageError(f"{cfg.presentation}: {exc}") from None
        if pres.field != fld:
            fld = pres.field
            cfg.field = str(fld)
        cfg.m = pres.m if pres.m is not None else "none"
        cfg.lam = fld.to_str(pres.lam) if pres.lam is not None else "none"
        return _Context(cfg, fld, pres, builtin=False), f"presentation {pres.name or cfg.presentation}"
    if cfg.m < 2:
        raise UsageError("m must be at least 2")
    try:
        lam = fld.parse_value(cfg.lam)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --lambda: {exc}") from None
    cfg.lam = fld.to_str(lam)
    pres = tetrahedral_relations(cfg.m, lam, fld)
    return _Context(cfg, fld, pres, builtin=True), f"built-in {pres.name}"


def run_verify(cfg: VerificationConfig) -> Report:
    """Run the configured checks; raises :class:`UsageError` on a bad config."""
    if cfg.max_n < 4:
        raise UsageError("--max-syzygy must be at least 4")
    if cfg.headroom < 1:
        raise UsageError("--headroom must be at least 1")
    ctx, source = _setup(cfg)
    results = []
    for name in cfg.checks:
        res = CheckResult(name)
        start = time.perf_counter()
        try:
            CHECKS[name](ctx, res)
        except (AdmissibilityError, FormError, ArithmeticError, ValueError) as exc:
            res.passed = False
            res.add("error", f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - start
        results.append(res)
    return Report(cfg, source, results)


def _builtin_presentation(which: str, m: int, lam: str, fld: Field) -> Presentation:
    if which == "lambda":
        return tetrahedral_relations(m, fld.parse_value(lam), fld)
    if which == "omega":
        return build_omega(m, fld)
    if which == "sigma":
        return build_sigma(m, fld.parse_value(lam), fld)
    raise UsageError(f"unknown algebra {which!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetrahedral",
                                     description="Verify higher tetrahedral algebras.")
    sub = parser.add_subparsers(dest="command")
    v = sub.add_parser("verify", help="run verification checks and write a report")
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--lambda", dest="lam", default="1")
    v.add_argument("--field", default="fp:1000003", help="fp:<p> or q")
    v.add_argument("--checks", default="all",
                   help="comma-separated subset of " + ",".join(ALL_CHECKS) + " (or all)")
    v.add_argument("--max-syzygy", dest="max_n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--headroom", type=int, default=2)
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.add_argument("--presentation", default=None, help="verify this presentation file")
    v.add_argument("--timing", action="store_true", help="add per-check timings to the report")
    e = sub.add_parser("emit", help="write a presentation file for a built-in algebra")
    e.add_argument("algebra", choices=("lambda", "omega", "sigma"))
    e.add_argument("--m", type=int, default=2)
    e.add_argument("--lambda", dest="lam", default="1", help="lambda, or t for sigma")
    e.add_argument("--field", default="fp:1000003")
    e.add_argument("--out", default=None)
    return parser


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        if args.command == "emit":
            fld = Field.parse(args.field)
            if args.m < 2:
                raise UsageError("m must be at least 2")
            _write(emit_presentation(_builtin_presentation(args.algebra, args.m, args.lam, fld)),
                   args.out)
            return 0
        cfg = VerificationConfig(m=args.m, lam=args.lam, field=args.field,
                                 checks=parse_checks(args.checks), max_n=args.max_n,
                                 seed=args.seed, headroom=args.headroom,
                                 presentation=args.presentation, timing=args.timing)
        report = run_verify(cfg)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"tetrahedral: error: {exc}", file=sys.stderr)
        return 2
    _write(report.render(), args.out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
