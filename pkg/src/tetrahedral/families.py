"""The one-parameter families, the blowup Omega(m), the family Sigma(m,t),
the quotient Gamma, and checks of the explicit maps between them.

Degenerations themselves are not computed.  What is checked are the facts
that feed the degeneration argument: the members of a family all have the
same dimension, and the members at ``t != 0`` are isomorphic to the member
at ``t = 1`` via explicit arrow scalings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import AlgebraMap, arrow_map, cartan_matrix, idempotent_subalgebra, quotient_by_arrow_ideal
from .basis_algebra import BasisAlgebra
from .path_algebra import FreeElement, Presentation, quotient_basis, tetrahedral_relations, word
from .quiver import Arrow, Quiver
from .scalars import Field

# ------------------------------------------------------------ families


@dataclass
class AlgebraFamily:
    """Presentations ``member(t)`` on a common quiver, all of one dimension."""

    name: str
    field: Field
    member: Callable[[int], Presentation]
    dimension: int


def lambda_family(m: int, lam=1, fld: Field | None = None) -> AlgebraFamily:
    """``Lambda(t)``: the tetrahedral relations with ``lambda`` replaced by ``t*lambda``."""
    fld = fld or Field.prime()
    lam = fld.canon(lam)
    return AlgebraFamily(f"Lambda({m},t*{fld.to_str(lam)})", fld,
                         lambda t: tetrahedral_relations(m, fld.mul(fld.canon(t), lam), fld),
                         36 * m)


def sample_roots(fld: Field, n: int, count: int, seed: int = 0) -> list:
    """Pairs ``(a, t)`` with ``a**n == t`` and ``t != 0``.

    A nonzero ``a`` is drawn first and ``t = a**n`` is formed.  The root is
    then recovered with ``nth_root`` (it may differ from the drawn value),
    so the pairs come out of a genuine round trip.
    """
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        a = fld.random(rng, nonzero=True)
        t = fld.pow(a, n)
        if t in seen or t == fld.one:
            continue
        root = fld.nth_root(t, n)
        if root is None or fld.pow(root, n) != t:
            raise ArithmeticError(f"nth_root failed to invert {fld.to_str(t)}")
        seen.add(t)
        out.append((root, t))
    return out


@dataclass
class IsoVerdict:
    name: str
    parameter: object
    is_homomorphism: bool
    is_bijective: bool
    rank: int
    dim: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_homomorphism and self.is_bijective


def _verdict(name, parameter, amap: AlgebraMap, relations) -> IsoVerdict:
    rep = amap.check(relations)
    return IsoVerdict(name, parameter, rep.is_homomorphism, rep.is_bijective, rep.rank,
                      amap.source.dim, rep.failures[:5])


def scaling_iso_check(family: AlgebraFamily, t, a, m: int,
                      algebras: dict | None = None) -> IsoVerdict:
    """``phi_t(theta) = a*theta`` from ``member(1)`` to ``member(t)``; needs
    ``a**(3(m-1)) == t``.  ``algebras`` caches built members by parameter."""
    fld = family.field
    t, a = fld.canon(t), fld.canon(a)
    if fld.pow(a, 3 * (m - 1)) != t:
        raise ValueError("scaling factor does not satisfy a^(3(m-1)) = t")
    algebras = {} if algebras is None else algebras
    for s in (fld.one, t):
        if s not in algebras:
            algebras[s] = quotient_basis(family.member(s))
    src, tgt = algebras[fld.one], algebras[t]
    amap = arrow_map(src, tgt, {x.name: (x.name, a) for x in src.quiver.arrows})
    return _verdict("phi_t", fld.to_str(t), amap, family.member(fld.one).relations)


# ------------------------------------------------------------ Omega(m)

OMEGA_ARROWS = [
    ("alpha1", 1, 7), ("alpha2", 2, 7), ("alpha3", 3, 8), ("alpha4", 4, 8),
    ("alpha5", 5, 9), ("alpha6", 6, 9),
    ("beta5", 7, 5), ("beta6", 7, 6), ("beta1", 8, 1), ("beta2", 8, 2),
    ("beta3", 9, 3), ("beta4", 9, 4),
]

# (first arrow, repeated six-cycle, tail): first (cycle)^(m-1) tail = 0
_OMEGA_ZERO = [
    ("alpha1", ("beta5", "alpha5", "beta3", "alpha3", "beta1", "alpha1"), ("beta2",)),
    ("alpha2", ("beta6", "alpha6", "beta4", "alpha4", "beta2", "alpha2"), ("beta1",)),
    ("alpha3", ("beta1", "alpha1", "beta5", "alpha5", "beta3", "alpha3"), ("beta4",)),
    ("alpha4", ("beta2", "alpha2", "beta6", "alpha6", "beta4", "alpha4"), ("beta3",)),
    ("alpha5", ("beta3", "alpha3", "beta1", "alpha1", "beta5", "alpha5"), ("beta6",)),
    ("alpha6", ("beta4", "alpha4", "beta2", "alpha2", "beta6", "alpha6"), ("beta5",)),
]

# the arrows of the tetrahedral quiver as paths of length two in Omega(m)
OMEGA_CORNER = {
    "delta": ("alpha1", "beta5"), "nu": ("alpha1", "beta6"),
    "epsilon": ("alpha2", "beta5"), "rho": ("alpha2", "beta6"),
    "alpha": ("alpha3", "beta1"), "sigma": ("alpha3", "beta2"),
    "gamma": ("alpha4", "beta1"), "beta": ("alpha4", "beta2"),
    "xi": ("alpha5", "beta3"), "eta": ("alpha5", "beta4"),
    "mu": ("alpha6", "beta3"), "omega": ("alpha6", "beta4"),
}


def omega_quiver() -> Quiver:
    return Quiver(list(range(1, 10)), [Arrow(*a) for a in OMEGA_ARROWS])


def build_omega(m: int, fld: Field | None = None) -> Presentation:
    """Three commutativity relations and six zero relations of length ``6m``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    fld = fld or Field.prime()
    q = omega_quiver()
    rels = [
        word(q, fld, "beta1", "alpha1") - word(q, fld, "beta2", "alpha2"),
        word(q, fld, "beta3", "alpha3") - word(q, fld, "beta4", "alpha4"),
        word(q, fld, "beta5", "alpha5") - word(q, fld, "beta6", "alpha6"),
    ]
    for first, cyc, tail in _OMEGA_ZERO:
        rels.append(word(q, fld, first, *(cyc * (m - 1)), *cyc[:4], *tail))
    return Presentation(q, rels, fld, 6 * m, m=m, name=f"Omega({m})")


def omega_corner_check(m: int, fld: Field | None = None,
                       omega: BasisAlgebra | None = None,
                       lam0: BasisAlgebra | None = None) -> IsoVerdict:
    """``Lambda(m,0) -> e Omega(m) e`` sending each arrow to its length-two path."""
    fld = fld or Field.prime()
    pres = tetrahedral_relations(m, 0, fld)
    lam0 = lam0 or quotient_basis(pres)
    omega = omega or quotient_basis(build_omega(m, fld))
    corner = idempotent_subalgebra(omega, range(1, 7))
    imgs = {a: word(omega.quiver, fld, *p) for a, p in OMEGA_CORNER.items()}
    amap = AlgebraMap(lam0, corner, imgs)
    return _verdict("Lambda(m,0) -> eOmega(m)e", m, amap, pres.relations)


# ------------------------------------------------------------ Sigma(m,t)

SIGMA_ARROWS = [
    ("alpha", "x", "a"), ("beta", "b", "x"), ("gamma", "y", "b"),
    ("sigma", "c", "y"), ("omega", "z", "c"), ("delta", "a", "z"),
    ("epsilon", "x", "x"), ("eta", "y", "y"), ("mu", "z", "z"),
]
SIGMA_LOOPS = ("epsilon", "eta", "mu")

# the nine-arrow cycle read from x, and its rotations used by the relations
_SIGMA_CYCLE = ("alpha", "delta", "mu", "omega", "sigma", "eta", "gamma", "beta", "epsilon")


def _rotation(start: str) -> tuple:
    k = _SIGMA_CYCLE.index(start)
    return _SIGMA_CYCLE[k:] + _SIGMA_CYCLE[:k]


def sigma_quiver() -> Quiver:
    return Quiver(["x", "y", "z", "a", "b", "c"], [Arrow(*a) for a in SIGMA_ARROWS])


def build_sigma(m: int, t=0, fld: Field | None = None) -> Presentation:
    """The four relation groups, with the loops given weight 0.

    Loops carry ``loop^2 = t*loop`` so they never raise the weight; every
    other arrow has weight 1 and the nilpotency bound is ``6m``.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    fld = fld or Field.prime()
    t = fld.canon(t)
    q = sigma_quiver()

    def w(*names, c=1):
        return word(q, fld, *names, coeff=c)

    rels = [w("beta", "alpha"), w("sigma", "gamma"), w("delta", "omega")]
    for lp in SIGMA_LOOPS:
        rels.append(w(lp, lp) - w(lp, c=t))
    # (2) for each loop: t*(C)^m = loop*(C)^m and t*(D)^m = (D)^m*loop, where
    # C is the cycle ending with the loop and D the one starting with it
    pairs = [("alpha", "epsilon"), ("gamma", "eta"), ("omega", "mu")]
    for start, lp in pairs:
        c_cyc = _rotation(start) * m
        d_cyc = _rotation(lp) * m
        rels.append(w(*c_cyc, c=t) - w(lp, *c_cyc))
        rels.append(w(*d_cyc, c=t) - w(*d_cyc, lp))
    # (3)
    for start, lp in pairs:
        rels.append(w(*(_rotation(start) * m)) - w(*(_rotation(lp) * m)))
    # (4)
    for head, last in (("delta", "alpha"), ("beta", "gamma"), ("sigma", "omega")):
        cyc = _rotation(head) * m
        rels.append(w(*cyc, head))
        rels.append(w(last, *cyc))
    weights = {a[0]: (0 if a[0] in SIGMA_LOOPS else 1) for a in SIGMA_ARROWS}
    return Presentation(q, rels, fld, 6 * m, m=m, lam=t, weights=weights,
                        name=f"Sigma({m},{fld.to_str(t)})")


def sigma_scaling_check(m: int, t, b, fld: Field | None = None,
                        algebras: dict | None = None) -> IsoVerdict:
    """``psi_t``: loops to ``t^-1 * loop``, other arrows to ``b * arrow``; needs ``b**8 == t``."""
    fld = fld or Field.prime()
    t, b = fld.canon(t), fld.canon(b)
    if not t or fld.pow(b, 8) != t:
        raise ValueError("scaling factor does not satisfy b^8 = t")
    algebras = {} if algebras is None else algebras
    for s in (fld.one, t):
        if s not in algebras:
            algebras[s] = quotient_basis(build_sigma(m, s, fld))
    src, tgt = algebras[fld.one], algebras[t]
    tinv = fld.inv(t)
    imgs = {a: (a, tinv if a in SIGMA_LOOPS else b) for a, _, _ in SIGMA_ARROWS}
    amap = arrow_map(src, tgt, imgs)
    return _verdict("psi_t", fld.to_str(t), amap, build_sigma(m, 1, fld).relations)


def omega_sigma_map(omega: BasisAlgebra, sigma1: BasisAlgebra) -> AlgebraMap:
    """The map ``Omega(m) -> Sigma(m,1)`` given on idempotents and arrows."""
    fld = sigma1.field
    q = sigma1.quiver

    def w(*names, c=1):
        return word(q, fld, *names, coeff=c)

    def e(v):
        return FreeElement.path(fld, q.trivial(v))

    verts = {
        1: w("epsilon"), 2: e("x") - w("epsilon"),
        3: w("eta"), 4: e("y") - w("eta"),
        5: w("mu"), 6: e("z") - w("mu"),
        7: e("a"), 8: e("b"), 9: e("c"),
    }
    arrows = {
        "alpha1": w("epsilon", "alpha"), "alpha2": w("alpha") - w("epsilon", "alpha"),
        "beta1": w("beta", "epsilon"), "beta2": w("beta", "epsilon") - w("beta"),
        "alpha3": w("eta", "gamma"), "alpha4": w("gamma") - w("eta", "gamma"),
        "beta3": w("sigma", "eta"), "beta4": w("sigma", "eta") - w("sigma"),
        "alpha5": w("mu", "omega"), "alpha6": w("omega") - w("mu", "omega"),
        "beta5": w("delta", "mu"), "beta6": w("delta", "mu") - w("delta"),
    }
    return AlgebraMap(omega, sigma1, arrows, verts)


def omega_sigma_iso_check(m: int, fld: Field | None = None,
                          omega: BasisAlgebra | None = None,
                          sigma1: BasisAlgebra | None = None) -> IsoVerdict:
    fld = fld or Field.prime()
    omega = omega or quotient_basis(build_omega(m, fld))
    sigma1 = sigma1 or quotient_basis(build_sigma(m, 1, fld))
    amap = omega_sigma_map(omega, sigma1)
    return _verdict("Omega(m) -> Sigma(m,1)", m, amap, build_omega(m, fld).relations)


# ------------------------------------------------------------ special biserial


@dataclass
class BiserialReport:
    holds: bool
    witnesses: list


def special_biserial_check(pres: Presentation, alg: BasisAlgebra | None = None) -> BiserialReport:
    """Conditions (a) at most two arrows in and out of each vertex, and (b)
    for each arrow at most one arrow continuing it and at most one arrow
    preceding it outside the ideal.  Ideal membership uses normal forms."""
    alg = alg or quotient_basis(pres)
    q, fld = pres.quiver, pres.field
    witnesses = []
    for v in q.vertices:
        if len(q.outgoing(v)) > 2 or len(q.incoming(v)) > 2:
            witnesses.append(f"vertex {v} has more than two arrows in or out")
    for a in q.arrows:
        after = [b.name for b in q.outgoing(a.target) if alg.element(word(q, fld, a.name, b.name))]
        before = [c.name for c in q.incoming(a.source) if alg.element(word(q, fld, c.name, a.name))]
        if len(after) > 1:
            witnesses.append(f"arrow {a.name} is continued by {', '.join(after)}")
        if len(before) > 1:
            witnesses.append(f"arrow {a.name} is preceded by {', '.join(before)}")
    return BiserialReport(not witnesses, witnesses)


# ------------------------------------------------------------ Gamma

GAMMA_DELETED = ("delta", "nu", "epsilon", "rho")


def gamma_presentation(fld: Field | None = None, length_bound: int = 2) -> Presentation:
    """The displayed eight-arrow quiver with its four commutativity relations."""
    fld = fld or Field.prime()
    arrows = [("alpha", 3, 1), ("beta", 4, 2), ("gamma", 4, 1), ("eta", 5, 4),
              ("mu", 6, 3), ("xi", 5, 3), ("sigma", 3, 2), ("omega", 6, 4)]
    q = Quiver(list(range(1, 7)), [Arrow(*a) for a in arrows])
    rels = [
        word(q, fld, "omega", "beta") - word(q, fld, "mu", "sigma"),
        word(q, fld, "eta", "gamma") - word(q, fld, "xi", "alpha"),
        word(q, fld, "mu", "alpha") - word(q, fld, "omega", "gamma"),
        word(q, fld, "xi", "sigma") - word(q, fld, "eta", "beta"),
    ]
    return Presentation(q, rels, fld, length_bound, name="Gamma")


def _relation_span(fld: Field, rels: list) -> set:
    """Relations up to sign and order: each scaled to leading coefficient 1."""
    out = set()
    for r in rels:
        lead = min(r.terms, key=lambda p: (len(p), p.arrows))
        s = r.scale(fld.inv(r.terms[lead]))
        out.add(frozenset((p.arrows, c) for p, c in s.terms.items()))
    return out


@dataclass
class GammaReport:
    vertices: int
    arrows: int
    relations_match: bool
    quiver_match: bool
    dim: int
    cartan: list


def gamma_quotient_check(m: int, lam=0, fld: Field | None = None) -> GammaReport:
    fld = fld or Field.prime()
    pres = quotient_by_arrow_ideal(tetrahedral_relations(m, lam, fld), GAMMA_DELETED)
    ref = gamma_presentation(fld)
    quiver_match = ({(a.name, a.source, a.target) for a in pres.quiver.arrows}
                    == {(a.name, a.source, a.target) for a in ref.quiver.arrows})
    rel_match = _relation_span(fld, pres.relations) == _relation_span(fld, ref.relations)
    alg = quotient_basis(pres)
    return GammaReport(len(pres.quiver.vertices), len(pres.quiver.arrows), rel_match,
                       quiver_match, alg.dim, cartan_matrix(alg).tolist())


__all__ = [
    "AlgebraFamily", "lambda_family", "sample_roots", "IsoVerdict", "scaling_iso_check",
    "build_omega", "omega_corner_check", "build_sigma", "sigma_scaling_check",
    "omega_sigma_map", "omega_sigma_iso_check", "BiserialReport", "special_biserial_check",
    "gamma_presentation", "gamma_quotient_check",
]
