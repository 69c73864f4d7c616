"""Finite-dimensional algebras given by a basis of paths and structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import linalg
from .quiver import Path, Quiver
from .scalars import Field


def vec_add(fld: Field, x: dict, y: dict, c=1) -> dict:
    """``x + c*y`` for sparse vectors (a new dict)."""
    out = dict(x)
    for k, v in y.items():
        nv = fld.add(out.get(k, fld.zero), fld.mul(c, v))
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def vec_scale(fld: Field, x: dict, c) -> dict:
    c = fld.canon(c)
    if not c:
        return {}
    return {k: fld.mul(c, v) for k, v in x.items()}


@dataclass
class BasisAlgebra:
    """An algebra ``KQ/I`` presented by a basis of paths.

    ``mult[i]`` maps ``j`` to the sparse product vector ``b_i * b_j`` (pairs
    that multiply to zero are absent).  ``path_nf`` sends any path of the
    quiver to its sparse coordinate vector.
    """

    quiver: Quiver
    field: Field
    basis: list  # of Path
    mult: list
    path_nf: Callable[[Path], dict]
    vertices: list = None
    name: str = ""
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.vertices is None:
            self.vertices = list(self.quiver.vertices)
        self.index = {b: k for k, b in enumerate(self.basis)}

    # ------------------------------------------------------------ basics

    @property
    def dim(self) -> int:
        return len(self.basis)

    def source(self, k: int):
        return self.basis[k].source

    def target(self, k: int):
        return self.basis[k].target

    def idempotent_index(self, v) -> int:
        return self.index[Path(v, (), v)]

    def idempotent(self, v) -> dict:
        return {self.idempotent_index(v): self.field.one}

    def one(self) -> dict:
        return {self.idempotent_index(v): self.field.one for v in self.vertices}

    def arrow(self, name: str) -> dict:
        return self.path_nf(self.quiver.path(name))

    def indices(self, source=None, target=None) -> list[int]:
        return [k for k, b in enumerate(self.basis)
                if (source is None or b.source == source)
                and (target is None or b.target == target)]

    # ------------------------------------------------------- arithmetic

    def product(self, x: dict, y: dict) -> dict:
        fld = self.field
        out: dict = {}
        for i, a in x.items():
            row = self.mult[i]
            for j, b in y.items():
                prod = row.get(j)
                if prod is None:
                    continue
                c = fld.mul(a, b)
                for k, v in prod.items():
                    nv = fld.add(out.get(k, fld.zero), fld.mul(c, v))
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def add(self, x: dict, y: dict, c=1) -> dict:
        return vec_add(self.field, x, y, self.field.canon(c))

    def scale(self, x: dict, c) -> dict:
        return vec_scale(self.field, x, c)

    def power(self, x: dict, n: int) -> dict:
        if n == 0:
            return self.one()
        out = x
        for _ in range(n - 1):
            out = self.product(out, x)
        return out

    def element(self, x) -> dict:
        """Coordinates of a :class:`FreeElement` (the normal form map)."""
        out: dict = {}
        for p, c in x.terms.items():
            out = vec_add(self.field, out, self.path_nf(p), c)
        return out

    def basis_vector(self, k: int) -> dict:
        return {k: self.field.one}

    def dense(self, x: dict) -> np.ndarray:
        v = linalg.zeros(self.field, self.dim)
        for k, c in x.items():
            v[k] = c
        return v

    def sparse(self, v) -> dict:
        return {k: self.field.canon(c) for k, c in enumerate(v) if c}

    # -------------------------------------------------- multiplication maps

    def right_mult_matrix(self, x: dict, rows=None, cols=None) -> np.ndarray:
        """Matrix of ``b -> b*x`` in the row-vector convention."""
        rows = range(self.dim) if rows is None else rows
        cols = list(range(self.dim)) if cols is None else cols
        cpos = {c: k for k, c in enumerate(cols)}
        out = linalg.zeros(self.field, (len(rows), len(cols)))
        for r, i in enumerate(rows):
            for k, v in self.product({i: self.field.one}, x).items():
                out[r, cpos[k]] = v
        return out

    def left_mult_matrix(self, x: dict, rows=None, cols=None) -> np.ndarray:
        """Matrix of ``b -> x*b`` in the row-vector convention."""
        rows = range(self.dim) if rows is None else rows
        cols = list(range(self.dim)) if cols is None else cols
        cpos = {c: k for k, c in enumerate(cols)}
        out = linalg.zeros(self.field, (len(rows), len(cols)))
        for r, i in enumerate(rows):
            for k, v in self.product(x, {i: self.field.one}).items():
                out[r, cpos[k]] = v
        return out

    # ------------------------------------------------------------ checks

    def check_associative(self, triples=None) -> list:
        """Return basis triples ``(i, j, k)`` where associativity fails."""
        bad = []
        one = self.field.one
        if triples is None:
            triples = ((i, j, k) for i in range(self.dim) for j in self.mult[i]
                       for k in range(self.dim)
                       if self.basis[j].target == self.basis[k].source)
        for i, j, k in triples:
            left = self.product(self.product({i: one}, {j: one}), {k: one})
            right = self.product({i: one}, self.product({j: one}, {k: one}))
            if left != right:
                bad.append((i, j, k))
        return bad

    def check_identity(self) -> bool:
        one = self.one()
        return all(self.product(one, {k: self.field.one}) == {k: self.field.one}
                   and self.product({k: self.field.one}, one) == {k: self.field.one}
                   for k in range(self.dim))

    def kills(self, relations) -> list:
        """Relations whose normal form is nonzero."""
        return [r for r in relations if self.element(r)]


def structure_constants(basis: list, path_nf, quiver: Quiver) -> list:
    mult = [dict() for _ in basis]
    for i, b in enumerate(basis):
        for j, c in enumerate(basis):
            if b.target != c.source:
                continue
            prod = path_nf(Path(b.source, b.arrows + c.arrows, c.target))
            if prod:
                mult[i][j] = prod
    return mult
