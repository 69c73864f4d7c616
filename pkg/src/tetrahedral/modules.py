"""Right modules over a :class:`BasisAlgebra`, given as quiver representations.

Convention: vectors are rows.  The action of an arrow ``a: s -> t`` is a
matrix of shape ``dims[s] x dims[t]`` and a path acts by the product of its
arrow matrices in order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .basis_algebra import BasisAlgebra
from .quiver import Path
from .scalars import Field


@dataclass
class RightModule:
    field: Field
    vertices: list
    arrows: list  # of (name, source, target)
    dims: dict
    actions: dict  # arrow name -> matrix
    name: str = ""

    def __post_init__(self):
        for a, s, t in self.arrows:
            m = self.actions[a]
            if m.shape != (self.dims[s], self.dims[t]):
                raise ValueError(f"action of {a} has shape {m.shape}, "
                                 f"expected {(self.dims[s], self.dims[t])}")

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> list:
        return [self.dims[v] for v in self.vertices]

    def path_matrix(self, p: Path) -> np.ndarray:
        out = linalg.identity(self.field, self.dims[p.source])
        for a in p.arrows:
            out = linalg.matmul(self.field, out, self.actions[a])
        return out

    def check_relations(self, relations) -> list:
        """Relations that do not act as zero."""
        bad = []
        for r in relations:
            s, t = r.endpoints()
            acc = linalg.zeros(self.field, (self.dims[s], self.dims[t]))
            for p, c in r.terms.items():
                acc = linalg.reduce(self.field, acc + c * self.path_matrix(p))
            if acc.any():
                bad.append(r)
        return bad

    # ----------------------------------------------------- radical, socle

    def radical_rows(self, v) -> np.ndarray:
        """Row basis of ``(M rad)_v``."""
        blocks = [self.actions[a] for a, s, t in self.arrows if t == v and self.dims[s]]
        if not blocks or self.dims[v] == 0:
            return linalg.zeros(self.field, (0, self.dims[v]))
        return linalg.row_space_basis(self.field, np.concatenate(blocks, axis=0))

    def socle_rows(self, v) -> np.ndarray:
        blocks = [self.actions[a] for a, s, t in self.arrows if s == v]
        if not blocks:
            return linalg.identity(self.field, self.dims[v])
        return linalg.left_nullspace(self.field, np.concatenate(blocks, axis=1))

    def top_dims(self) -> dict:
        return {v: self.dims[v] - self.radical_rows(v).shape[0] for v in self.vertices}

    def generator_count(self) -> int:
        """Number of minimal generators, ``dim M / M rad``."""
        return sum(self.top_dims().values())

    def radical_series_dims(self) -> list:
        """Total dimensions of ``M rad^k`` for k = 0, 1, ..."""
        out = [self.dim]
        cur = self
        while cur.dim:
            cur = cur.submodule({v: cur.radical_rows(v) for v in cur.vertices})
            out.append(cur.dim)
        return out

    # ---------------------------------------------- sub and quotient modules

    def submodule(self, rows: dict) -> "RightModule":
        """The submodule with the given row bases (must be closed)."""
        acts = {}
        for a, s, t in self.arrows:
            img = linalg.matmul(self.field, rows[s], self.actions[a])
            coords = linalg.solve_left(self.field, rows[t], img)
            if coords is None:
                raise ValueError(f"subspace is not closed under {a}")
            acts[a] = coords
        return RightModule(self.field, self.vertices, self.arrows,
                           {v: rows[v].shape[0] for v in self.vertices}, acts)

    def quotient(self, rows: dict) -> "RightModule":
        """``M / U`` for a submodule ``U`` given by row bases."""
        fld = self.field
        keep, red = {}, {}
        for v in self.vertices:
            r, piv = linalg.rref(fld, rows[v]) if rows[v].shape[0] else (rows[v], [])
            red[v] = (r[: len(piv)], piv)
            keep[v] = [c for c in range(self.dims[v]) if c not in set(piv)]

        def project(v, x):
            r, piv = red[v]
            x = x.copy()
            for i, c in enumerate(piv):
                if x[c]:
                    x = linalg.reduce(fld, x - x[c] * r[i])
            return x[keep[v]]

        acts = {}
        for a, s, t in self.arrows:
            m = linalg.zeros(fld, (len(keep[s]), len(keep[t])))
            for i, c in enumerate(keep[s]):
                row = self.actions[a][c]
                m[i] = project(t, row)
            acts[a] = m
        return RightModule(fld, self.vertices, self.arrows,
                           {v: len(keep[v]) for v in self.vertices}, acts)

    def subquotient(self, upper: dict, lower: dict) -> "RightModule":
        """``U / V`` for submodules ``V <= U`` given by row bases in M."""
        sub = self.submodule(upper)
        inner = {}
        for v in self.vertices:
            c = linalg.solve_left(self.field, upper[v], lower[v])
            if c is None:
                raise ValueError("lower submodule is not contained in the upper one")
            inner[v] = c
        return sub.quotient(inner)

    def direct_sum(self, other: "RightModule") -> "RightModule":
        fld = self.field
        acts = {}
        for a, s, t in self.arrows:
            m = linalg.zeros(fld, (self.dims[s] + other.dims[s], self.dims[t] + other.dims[t]))
            m[: self.dims[s], : self.dims[t]] = self.actions[a]
            m[self.dims[s]:, self.dims[t]:] = other.actions[a]
            acts[a] = m
        return RightModule(fld, self.vertices, self.arrows,
                           {v: self.dims[v] + other.dims[v] for v in self.vertices}, acts)


def _module_arrows(alg: BasisAlgebra) -> list:
    vs = set(alg.vertices)
    return [(a.name, a.source, a.target) for a in alg.quiver.arrows
            if a.source in vs and a.target in vs]


def projective_module(alg: BasisAlgebra, i) -> RightModule:
    """``P_i = e_i A`` with basis the basis elements starting at ``i``."""
    comp = {v: alg.indices(source=i, target=v) for v in alg.vertices}
    pos = {k: n for v in alg.vertices for n, k in enumerate(comp[v])}
    arrows = _module_arrows(alg)
    acts = {}
    for a, s, t in arrows:
        av = alg.arrow(a)
        m = linalg.zeros(alg.field, (len(comp[s]), len(comp[t])))
        for r, k in enumerate(comp[s]):
            for j, c in alg.product({k: alg.field.one}, av).items():
                m[r, pos[j]] = c
        acts[a] = m
    mod = RightModule(alg.field, list(alg.vertices), arrows,
                      {v: len(comp[v]) for v in alg.vertices}, acts, name=f"P{i}")
    mod.basis_labels = {v: [alg.basis[k] for k in comp[v]] for v in alg.vertices}
    return mod


def simple_module(alg: BasisAlgebra, i) -> RightModule:
    arrows = _module_arrows(alg)
    dims = {v: int(v == i) for v in alg.vertices}
    acts = {a: linalg.zeros(alg.field, (dims[s], dims[t])) for a, s, t in arrows}
    return RightModule(alg.field, list(alg.vertices), arrows, dims, acts, name=f"S{i}")


def zero_module(alg: BasisAlgebra) -> RightModule:
    arrows = _module_arrows(alg)
    dims = {v: 0 for v in alg.vertices}
    acts = {a: linalg.zeros(alg.field, (0, 0)) for a, _, _ in arrows}
    return RightModule(alg.field, list(alg.vertices), arrows, dims, acts, name="0")


# ------------------------------------------------------- covers, syzygies


@dataclass
class ProjectiveCover:
    module: RightModule  # the projective P
    summands: list  # vertex of each indecomposable summand, in order
    epi: dict  # vertex -> matrix (P_v -> M_v)


def projective_cover(alg: BasisAlgebra, m: RightModule) -> ProjectiveCover:
    if m.dim == 0:
        raise ValueError("the zero module has no projective cover summands")
    fld = m.field
    gens = []  # (vertex, row vector in M_v)
    for v in m.vertices:
        rad = m.radical_rows(v)
        for c in linalg.complement_columns(fld, rad) if m.dims[v] else []:
            e = linalg.zeros(fld, m.dims[v])
            e[c] = fld.one
            gens.append((v, e))
    cover = None
    epi_blocks = {v: [] for v in m.vertices}
    summands = []
    proj_cache: dict = {}
    for v, g in gens:
        p = proj_cache.get(v) or projective_module(alg, v)
        proj_cache[v] = p
        cover = p if cover is None else cover.direct_sum(p)
        summands.append(v)
        for w in m.vertices:
            labels = p.basis_labels[w]
            block = linalg.zeros(fld, (len(labels), m.dims[w]))
            for r, b in enumerate(labels):
                block[r] = linalg.matmul(fld, g.reshape(1, -1), m.path_matrix(b))[0]
            epi_blocks[w].append(block)
    epi = {w: np.concatenate(epi_blocks[w], axis=0) if epi_blocks[w]
           else linalg.zeros(fld, (0, m.dims[w])) for w in m.vertices}
    return ProjectiveCover(cover, summands, epi)


def syzygy(alg: BasisAlgebra, m: RightModule, cover: ProjectiveCover | None = None) -> RightModule:
    """Kernel of the projective cover, with the induced action."""
    if m.dim == 0:
        return m
    cover = cover or projective_cover(alg, m)
    p = cover.module
    fld = m.field
    ker = {}
    for v in m.vertices:
        e = cover.epi[v]
        if e.shape[0] == 0:
            ker[v] = linalg.zeros(fld, (0, 0))
        elif m.dims[v] == 0:
            ker[v] = linalg.identity(fld, e.shape[0])
        else:
            ker[v] = linalg.left_nullspace(fld, e)
        image_dim = linalg.rank(fld, e) if e.size else 0
        if image_dim != m.dims[v]:
            raise AssertionError("cover map is not surjective")
    return p.submodule(ker)


# ------------------------------------------------------------------- Hom


def hom_space(m: RightModule, n: RightModule) -> list:
    """Basis of Hom(M, N): a list of dicts vertex -> matrix."""
    fld = m.field
    vs = m.vertices
    offs, total = {}, 0
    for v in vs:
        offs[v] = total
        total += m.dims[v] * n.dims[v]
    eqs = []
    for a, s, t in m.arrows:
        am, an = m.actions[a], n.actions[a]
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        if ms == 0 or nt == 0:
            continue
        block = linalg.zeros(fld, (ms * nt, total))
        # (A^M H_t)[r, c] = sum_k A^M[r, k] H_t[k, c]
        for r in range(ms):
            for k in range(mt):
                x = am[r, k]
                if x:
                    for c in range(nt):
                        block[r * nt + c, offs[t] + k * nt + c] += x
        # -(H_s A^N)[r, c] = -sum_k H_s[r, k] A^N[k, c]
        for r in range(ms):
            for k in range(ns):
                for c in range(nt):
                    x = an[k, c]
                    if x:
                        block[r * nt + c, offs[s] + r * ns + k] -= x
        eqs.append(linalg.reduce(fld, block))
    if total == 0:
        return []
    sol = linalg.nullspace(fld, np.concatenate(eqs, axis=0)) if eqs else linalg.identity(fld, total)
    out = []
    for row in sol:
        h = {}
        for v in vs:
            h[v] = row[offs[v]: offs[v] + m.dims[v] * n.dims[v]].reshape(m.dims[v], n.dims[v]).copy()
        out.append(h)
    return out


def is_hom(m: RightModule, n: RightModule, h: dict) -> bool:
    fld = m.field
    for a, s, t in m.arrows:
        lhs = linalg.matmul(fld, m.actions[a], h[t])
        rhs = linalg.matmul(fld, h[s], n.actions[a])
        if not np.array_equal(lhs, rhs):
            return False
    return True


def _is_iso_map(fld: Field, h: dict) -> bool:
    return all(linalg.is_invertible(fld, x) for x in h.values() if x.size)


def is_isomorphic(m: RightModule, n: RightModule, seed: int = 0, samples: int = 32) -> str:
    """``"yes"``, ``"no"`` or ``"inconclusive"``."""
    if m.dims != n.dims:
        return "no"
    if m.radical_series_dims() != n.radical_series_dims():
        return "no"
    if m.dim == 0:
        return "yes"
    basis = hom_space(m, n)
    if not basis:
        return "no"
    fld = m.field
    rng = random.Random(seed)

    def combo(coeffs):
        h = {}
        for v in m.vertices:
            acc = linalg.zeros(fld, (m.dims[v], n.dims[v]))
            for c, b in zip(coeffs, basis):
                if c:
                    acc = acc + fld.canon(c) * b[v]
            h[v] = linalg.reduce(fld, acc)
        return h

    for _ in range(samples):
        if _is_iso_map(fld, combo([fld.random(rng) for _ in basis])):
            return "yes"
    if len(basis) <= 4:
        for coeffs in itertools.product((0, 1, -1, 2), repeat=len(basis)):
            if any(coeffs) and _is_iso_map(fld, combo(coeffs)):
                return "yes"
    return "inconclusive"


# ------------------------------------------------------------ periodicity


@dataclass
class PeriodicityReport:
    vertex: object
    syzygy_dims: list
    top_dims: list
    cover_shapes: list  # vertices of the cover summands of each Omega^n
    verdicts: list  # is_isomorphic(Omega^n, S_i) for n = 1..
    period_found: int | None
    top_vectors: list = field(default_factory=list)  # per-vertex top dims

    @property
    def bound(self) -> int:
        return len(self.syzygy_dims) - 1


def periodicity_report(alg: BasisAlgebra, i, max_n: int, seed: int = 0,
                       stop_at_period: bool = True) -> PeriodicityReport:
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    s = simple_module(alg, i)
    cur = s
    dims, tops, shapes, verdicts, tvecs = [1], [], [], [], []
    period = None
    for n in range(1, max_n + 1):
        cover = projective_cover(alg, cur)
        shapes.append(list(cover.summands))
        tvecs.append(cur.top_dims())
        tops.append(len(cover.summands))
        cur = syzygy(alg, cur, cover)
        dims.append(cur.dim)
        verdict = is_isomorphic(cur, s, seed=seed + n)
        verdicts.append(verdict)
        if verdict == "yes" and period is None:
            period = n
            if stop_at_period:
                break
        if cur.dim == 0:
            break
    # record the top of the last syzygy as well
    if cur.dim:
        tvecs.append(cur.top_dims())
        tops.append(cur.generator_count())
    return PeriodicityReport(i, dims, tops, shapes, verdicts, period, tvecs)


def syzygies(alg: BasisAlgebra, m: RightModule, n: int) -> list:
    """``[M, Omega M, ..., Omega^n M]``."""
    out = [m]
    for _ in range(n):
        out.append(syzygy(alg, out[-1]))
    return out


def rad_mod_soc(alg: BasisAlgebra, i) -> RightModule:
    """``rad P_i / soc P_i``."""
    p = projective_module(alg, i)
    rad = {v: p.radical_rows(v) for v in p.vertices}
    soc = {v: p.socle_rows(v) for v in p.vertices}
    return p.subquotient(rad, soc)
