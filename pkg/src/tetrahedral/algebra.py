"""Structure of a :class:`BasisAlgebra`: Cartan matrix, Loewy data,
symmetrizing forms, explicit algebra maps, idempotent subalgebras and
quotients by arrow ideals."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .basis_algebra import BasisAlgebra, vec_add
from .path_algebra import FreeElement, Presentation
from .quiver import Arrow, Path, Quiver


class FormError(ValueError):
    """A bilinear form failed symmetry, associativity or non-degeneracy."""


# ------------------------------------------------------------- invariants


def cartan_matrix(alg: BasisAlgebra) -> np.ndarray:
    vs = alg.vertices
    pos = {v: k for k, v in enumerate(vs)}
    out = np.zeros((len(vs), len(vs)), dtype=np.int64)
    for b in alg.basis:
        out[pos[b.source], pos[b.target]] += 1
    return out


def _span(alg: BasisAlgebra, vectors: list) -> np.ndarray:
    if not vectors:
        return linalg.zeros(alg.field, (0, alg.dim))
    m = np.stack([alg.dense(v) for v in vectors])
    return linalg.row_space_basis(alg.field, m)


def radical_series(alg: BasisAlgebra, v) -> list[int]:
    """Dimensions of ``e_v A rad^k`` for k = 0, 1, ... until zero."""
    arrows = [alg.arrow(a.name) for a in alg.quiver.arrows]
    arrows = [a for a in arrows if a]
    cur = _span(alg, [alg.basis_vector(k) for k in alg.indices(source=v)])
    dims = [cur.shape[0]]
    while cur.shape[0]:
        nxt = [alg.product(alg.sparse(row), a) for row in cur for a in arrows]
        cur = _span(alg, [x for x in nxt if x])
        dims.append(cur.shape[0])
    return dims


def right_socle(alg: BasisAlgebra, v) -> np.ndarray:
    """Rows spanning ``{x in e_v A : x * arrow = 0 for every arrow}``."""
    idx = alg.indices(source=v)
    blocks = [alg.right_mult_matrix(alg.arrow(a.name), rows=idx) for a in alg.quiver.arrows]
    stacked = np.concatenate(blocks, axis=1)
    ker = linalg.left_nullspace(alg.field, stacked)
    out = linalg.zeros(alg.field, (ker.shape[0], alg.dim))
    for r in range(ker.shape[0]):
        for c, k in enumerate(idx):
            out[r, k] = ker[r, c]
    return out


@dataclass
class LoewyData:
    radical_dims: dict
    socle_dims: dict
    socle_bases: dict
    loewy_length: int


def socle_and_radical_series(alg: BasisAlgebra) -> LoewyData:
    rad = {v: radical_series(alg, v) for v in alg.vertices}
    soc = {v: right_socle(alg, v) for v in alg.vertices}
    return LoewyData(rad, {v: s.shape[0] for v, s in soc.items()}, soc,
                     max(len(d) - 1 for d in rad.values()))


# ---------------------------------------------------------- bilinear forms


@dataclass
class GramForm:
    matrix: np.ndarray
    functional: dict  # basis index -> value of the trace functional

    def pair(self, i: int, j: int):
        return self.matrix[i, j]


def gram_from_functional(alg: BasisAlgebra, functional: dict) -> np.ndarray:
    g = linalg.zeros(alg.field, (alg.dim, alg.dim))
    fld = alg.field
    for i in range(alg.dim):
        for j, prod in alg.mult[i].items():
            s = fld.zero
            for k, c in prod.items():
                e = functional.get(k)
                if e:
                    s = fld.add(s, fld.mul(c, e))
            g[i, j] = s
    return g


def check_form(alg: BasisAlgebra, g: np.ndarray) -> list[str]:
    """Names of the failed form invariants (empty list when all hold)."""
    fld = alg.field
    problems = []
    if not np.array_equal(g, g.T):
        i, j = map(int, np.argwhere(g != g.T)[0])
        problems.append(f"asymmetric at ({alg.basis[i]}, {alg.basis[j]})")
    # (ab, c) = (a, bc) on every composable triple
    for i in range(alg.dim):
        for j in alg.indices(source=alg.target(i)):
            ab = alg.mult[i].get(j, {})
            for k in alg.indices(source=alg.target(j)):
                bc = alg.mult[j].get(k, {})
                lhs = fld.zero
                for t, c in ab.items():
                    lhs = fld.add(lhs, fld.mul(c, g[t, k]))
                rhs = fld.zero
                for t, c in bc.items():
                    rhs = fld.add(rhs, fld.mul(c, g[i, t]))
                if lhs != rhs:
                    problems.append(f"not associative at ({alg.basis[i]}, {alg.basis[j]}, {alg.basis[k]})")
                    return problems
    if not linalg.is_invertible(fld, g):
        problems.append("degenerate (Gram matrix is singular)")
    return problems


def symmetrizing_form(alg: BasisAlgebra, functional: dict) -> GramForm:
    """The form ``(a, b) = functional(a*b)``, verified or rejected.

    For the higher tetrahedral algebra the functional is the coefficient of
    the socle elements ``omega_i``; see :func:`omega_functional`.
    """
    g = gram_from_functional(alg, functional)
    problems = check_form(alg, g)
    if problems:
        raise FormError("; ".join(problems))
    return GramForm(g, functional)


def socle_functional(alg: BasisAlgebra, socle_elements: dict) -> dict:
    """Functional equal to 1 on the given basis indices and 0 elsewhere."""
    return {k: alg.field.one for k in socle_elements.values()}


def omega_functional(alg: BasisAlgebra, model: BasisAlgebra, iso: "AlgebraMap") -> dict:
    """Pull back the omega-coefficient functional of the explicit basis model along ``iso``.

    ``iso`` maps ``alg`` to ``model`` (an explicit basis model with
    ``info["omega"]``).
    """
    omegas = set(model.info["omega"].values())
    out = {}
    for k in range(alg.dim):
        s = alg.field.zero
        for t, c in iso.images[k].items():
            if t in omegas:
                s = alg.field.add(s, c)
        if s:
            out[k] = s
    return out


def find_symmetrizing_functional(alg: BasisAlgebra, seed: int = 0):
    """Basis-free search: a functional killing all commutators whose form is
    non-degenerate.  Returns ``(functional, dim of the solution space)`` or
    ``(None, dim)`` if a random solution is degenerate."""
    fld = alg.field
    ech = linalg.SparseEchelon(fld)
    one = fld.one
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            comm = vec_add(fld, alg.product({i: one}, {j: one}),
                           alg.product({j: one}, {i: one}), fld.neg(one))
            if comm:
                ech.add(comm)
    rows = list(ech.pivots.values())
    m = linalg.zeros(fld, (len(rows), alg.dim))
    for r, row in enumerate(rows):
        for k, v in row.items():
            m[r, k] = v
    sols = linalg.nullspace(fld, m)
    rng = random.Random(seed)
    coeffs = [fld.random(rng) for _ in range(sols.shape[0])]
    vec = linalg.zeros(fld, alg.dim)
    for c, row in zip(coeffs, sols):
        vec = linalg.reduce(fld, vec + c * row)
    functional = alg.sparse(vec)
    g = gram_from_functional(alg, functional)
    if not linalg.is_invertible(fld, g):
        return None, sols.shape[0]
    return functional, sols.shape[0]


# ------------------------------------------------------------ algebra maps


@dataclass
class MapReport:
    idempotents_ok: bool
    arrows_graded: bool
    relations_ok: bool
    multiplicative: bool
    rank: int
    source_dim: int
    target_dim: int
    failures: list = field(default_factory=list)

    @property
    def is_homomorphism(self) -> bool:
        return self.idempotents_ok and self.arrows_graded and self.relations_ok and self.multiplicative

    @property
    def is_injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def is_bijective(self) -> bool:
        return self.rank == self.source_dim == self.target_dim

    @property
    def is_isomorphism(self) -> bool:
        return self.is_homomorphism and self.is_bijective


class AlgebraMap:
    """A map of algebras given on idempotents and arrows.

    ``vertex_images`` and ``arrow_images`` are :class:`FreeElement` objects
    on the target's quiver (or already-reduced coordinate dicts).  Missing
    vertex images default to the idempotent at ``vertex_map[v]``.
    """

    def __init__(self, source: BasisAlgebra, target: BasisAlgebra,
                 arrow_images: dict, vertex_images: dict | None = None,
                 vertex_map: dict | None = None):
        self.source, self.target = source, target
        self.arrow_images = {a: self._coords(x) for a, x in arrow_images.items()}
        vertex_images = dict(vertex_images or {})
        vertex_map = vertex_map or {}
        for v in source.vertices:
            if v not in vertex_images:
                vertex_images[v] = target.idempotent(vertex_map.get(v, v))
        self.vertex_images = {v: self._coords(x) for v, x in vertex_images.items()}
        self.images = [self.path_image(b) for b in source.basis]

    def _coords(self, x) -> dict:
        return self.target.element(x) if isinstance(x, FreeElement) else dict(x)

    def path_image(self, p: Path) -> dict:
        if p.is_trivial:
            return self.vertex_images[p.source]
        out = self.arrow_images[p.arrows[0]]
        for a in p.arrows[1:]:
            out = self.target.product(out, self.arrow_images[a])
        return out

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            out = vec_add(self.target.field, out, self.images[k], c)
        return out

    def apply_free(self, x: FreeElement) -> dict:
        out: dict = {}
        for p, c in x.terms.items():
            out = vec_add(self.target.field, out, self.path_image(p), c)
        return out

    def matrix(self) -> np.ndarray:
        m = linalg.zeros(self.target.field, (self.source.dim, self.target.dim))
        for i, img in enumerate(self.images):
            for k, c in img.items():
                m[i, k] = c
        return m

    def check(self, relations=()) -> MapReport:
        tgt, src = self.target, self.source
        failures = []
        vs = src.vertices
        idem_ok = True
        total: dict = {}
        for v in vs:
            ev = self.vertex_images[v]
            total = vec_add(tgt.field, total, ev)
            for w in vs:
                prod = tgt.product(ev, self.vertex_images[w])
                if prod != (ev if v == w else {}):
                    idem_ok = False
                    failures.append(f"idempotent images of {v}, {w} are not orthogonal idempotents")
        if total != tgt.one():
            idem_ok = False
            failures.append("idempotent images do not sum to 1")
        graded = True
        for a, img in self.arrow_images.items():
            s, t = src.quiver.source(a), src.quiver.target(a)
            sand = tgt.product(tgt.product(self.vertex_images[s], img), self.vertex_images[t])
            if sand != img:
                graded = False
                failures.append(f"image of {a} is not in e_s(a) B e_t(a)")
        rel_ok = True
        for r in relations:
            if self.apply_free(r):
                rel_ok = False
                failures.append(f"relation {r.to_str(src.quiver)} does not map to zero")
        mult_ok = True
        for i in range(src.dim):
            for j in src.indices(source=src.target(i)):
                lhs = tgt.product(self.images[i], self.images[j])
                rhs = self.apply(src.mult[i].get(j, {}))
                if lhs != rhs:
                    mult_ok = False
                    failures.append(f"products of {src.basis[i]} and {src.basis[j]} disagree")
                    break
            if not mult_ok:
                break
        rank = linalg.rank(tgt.field, self.matrix())
        return MapReport(idem_ok, graded, rel_ok, mult_ok, rank, src.dim, tgt.dim, failures)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``other`` after ``self`` (apply self first)."""
        arrows = {a: other.apply(img) for a, img in self.arrow_images.items()}
        verts = {v: other.apply(img) for v, img in self.vertex_images.items()}
        return AlgebraMap(self.source, other.target, arrows, verts)


def arrow_map(source: BasisAlgebra, target: BasisAlgebra, arrow_images: dict,
              vertex_map: dict | None = None) -> AlgebraMap:
    """Map sending arrows to (scaled, renamed) arrows of the target.

    ``arrow_images`` maps each arrow name to a FreeElement or to a pair
    ``(target arrow name, raw coefficient)``.
    """
    imgs = {}
    for a, x in arrow_images.items():
        if isinstance(x, tuple):
            name, c = x
            imgs[a] = {k: target.field.mul(c, v) for k, v in target.arrow(name).items()}
        else:
            imgs[a] = x
    return AlgebraMap(source, target, imgs, vertex_map=vertex_map)


def check_automorphism(alg: BasisAlgebra, amap: AlgebraMap, relations=()) -> dict:
    rep = amap.check(relations)
    return {"is_homomorphism": rep.is_homomorphism, "is_bijective": rep.is_bijective,
            "report": rep}


# ----------------------------------------------- subalgebras and quotients


def idempotent_subalgebra(alg: BasisAlgebra, verts) -> BasisAlgebra:
    """``e A e`` for ``e`` the sum of the idempotents at ``verts``."""
    verts = [v for v in alg.vertices if v in set(verts)]
    if not verts:
        raise ValueError("need at least one vertex")
    vs = set(verts)
    keep = [k for k, b in enumerate(alg.basis) if b.source in vs and b.target in vs]
    new = {k: n for n, k in enumerate(keep)}
    mult = []
    for k in keep:
        row = {}
        for j, prod in alg.mult[k].items():
            if j in new:
                row[new[j]] = {new[t]: c for t, c in prod.items()}
        mult.append(row)

    def path_nf(p: Path) -> dict:
        return {new[t]: c for t, c in alg.path_nf(p).items()}

    return BasisAlgebra(alg.quiver, alg.field, [alg.basis[k] for k in keep], mult,
                        path_nf, vertices=verts, name=f"e{alg.name}e", info={"parent_index": keep})


def quotient_by_arrow_ideal(pres: Presentation, arrows) -> Presentation:
    """Delete ``arrows`` and every relation term through them."""
    drop = set(arrows)
    q = pres.quiver
    unknown = drop - set(q.arrow)
    if unknown:
        raise KeyError(f"unknown arrows {sorted(unknown)}")
    nq = Quiver(list(q.vertices), [Arrow(a.name, a.source, a.target)
                                   for a in q.arrows if a.name not in drop])
    rels = []
    for r in pres.relations:
        terms = {p: c for p, c in r.terms.items() if not drop & set(p.arrows)}
        if terms:
            rels.append(FreeElement(pres.field, terms))
    weights = None if pres.weights is None else {a: w for a, w in pres.weights.items() if a not in drop}
    name = f"{pres.name}/({','.join(sorted(drop))})" if drop else pres.name
    return Presentation(nq, rels, pres.field, pres.length_bound, m=pres.m, lam=pres.lam,
                        weights=weights, name=name)
