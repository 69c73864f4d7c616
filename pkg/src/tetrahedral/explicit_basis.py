"""The explicit basis of the higher tetrahedral algebra built from the cycles X_i.

For each vertex ``i`` let ``X_i`` be the fixed product of arrows around the
shaded triangle at ``i``, ``tau`` its first arrow and ``tau_bar`` the other
arrow starting at ``i``.  The basis of ``e_i Lambda`` consists of

* the initial subwords of ``X_i^m``,
* ``X_i^k tau_bar`` and ``X_i^k tau_bar f(tau_bar)`` for ``0 <= k <= m-1``,
* ``X_i^k tau f(tau) g(f(tau))`` for ``0 <= k < m-1``,

6m elements in all.  Multiplication is concatenation followed by the path
reduction rules proved for this algebra: length-2 paths via the defining
relations, length 3 to 3m-1 paths to the unique basis path with the same
length and endpoints (the three exceptional cycles pick up a socle term),
cycles of length 3m to ``X_i^m`` and everything else to zero.
"""

from __future__ import annotations

from .basis_algebra import BasisAlgebra, structure_constants
from .path_algebra import LAMBDA_CORRECTED, cycle_power
from .quiver import Path, tetrahedral_quiver
from .scalars import Field, Scalar

# fixed versions of the X_i
X_VERSIONS = {
    1: ("delta", "eta", "gamma"),
    2: ("rho", "omega", "beta"),
    3: ("alpha", "nu", "mu"),
    4: ("beta", "rho", "omega"),
    5: ("eta", "gamma", "delta"),
    6: ("omega", "beta", "rho"),
}

# the cyclic paths of length three that differ from X_i by a socle term
EXCEPTIONAL_CYCLES = {
    2: ("epsilon", "eta", "beta"),
    4: ("beta", "epsilon", "eta"),
    5: ("eta", "beta", "epsilon"),
}


def basis_paths(m: int) -> dict:
    """The basis paths of each ``e_i Lambda``, keyed by vertex."""
    tq = tetrahedral_quiver()
    q, f, g, bar = tq.quiver, tq.f, tq.g, tq.bar
    out = {}
    for i in q.vertices:
        x = X_VERSIONS[i]
        tau, taub = x[0], bar[x[0]]
        words = [(x * m)[:k] for k in range(3 * m + 1)]
        for k in range(m):
            words.append(x * k + (taub,))
            words.append(x * k + (taub, f[taub]))
        for k in range(m - 1):
            words.append(x * k + (tau, f[tau], g[f[tau]]))
        out[i] = [q.path(*w) if w else q.trivial(i) for w in words]
    return out


def paper_basis_model(m: int, lam=0, fld: Field | None = None) -> BasisAlgebra:
    if m < 2:
        raise ValueError("m must be at least 2")
    fld = fld or Field.prime()
    lam = fld.canon(lam.value if isinstance(lam, Scalar) else lam)
    tq = tetrahedral_quiver()
    q, f, g, bar = tq.quiver, tq.f, tq.g, tq.bar
    per_vertex = basis_paths(m)
    paths = [p for i in q.vertices for p in per_vertex[i]]
    aidx, vidx = q.arrow_index, q.vertex_index
    paths.sort(key=lambda p: (len(p), vidx[p.source], tuple(aidx[a] for a in p.arrows)))
    index = {p: k for k, p in enumerate(paths)}
    if len(index) != 36 * m:
        raise AssertionError("explicit basis has repeated elements")

    by_shape: dict = {}
    for p in paths:
        by_shape.setdefault((len(p), p.source, p.target), []).append(index[p])
    omega = {i: index[q.path(*(X_VERSIONS[i] * m))] for i in q.vertices}
    x_idx = {i: index[q.path(*X_VERSIONS[i])] for i in q.vertices}
    one = fld.one

    def unique(length, s, t):
        ks = by_shape.get((length, s, t), [])
        if len(ks) != 1:
            raise ValueError(f"no unique basis path of length {length} from {s} to {t}")
        return ks[0]

    cache: dict = {}

    def path_nf(p: Path) -> dict:
        hit = cache.get(p)
        if hit is not None:
            return hit
        n = len(p)
        if n <= 1 or (n == 2 and p.arrows[1] == f[p.arrows[0]]):
            res = {index[p]: one}
        elif n == 2:
            # theta g(theta) = theta_bar f(theta_bar) - lambda * correction
            theta = p.arrows[0]
            tb = bar[theta]
            res = {index[q.path(tb, f[tb])]: one}
            if tb in LAMBDA_CORRECTED and lam:
                corr = q.path(*(cycle_power(tq, theta, m - 1) + (theta, g[theta])))
                for k, v in path_nf(corr).items():
                    res[k] = fld.sub(res.get(k, fld.zero), fld.mul(lam, v))
                res = {k: v for k, v in res.items() if v}
        elif n == 3 and p.source == p.target:
            i = p.source
            res = {x_idx[i]: one}
            if EXCEPTIONAL_CYCLES.get(i) == p.arrows and lam:
                res[omega[i]] = fld.neg(lam)
        elif n < 3 * m:
            res = {unique(n, p.source, p.target): one}
        elif n == 3 * m and p.source == p.target:
            res = {omega[p.source]: one}
        else:
            res = {}
        cache[p] = res
        return res

    mult = structure_constants(paths, path_nf, q)
    info = {"omega": omega, "X": x_idx, "per_vertex": per_vertex}
    return BasisAlgebra(q, fld, paths, mult, path_nf,
                        name=f"explicit-basis({m},{fld.to_str(lam)})", info=info)


def complement(alg: BasisAlgebra, m: int, k: int) -> int | None:
    """The basis element ``c`` with ``b_k * c = omega_{s(b_k)}``, if any."""
    b = alg.basis[k]
    w = alg.info["omega"][b.source]
    for c in alg.indices(source=b.target, target=b.source):
        if len(alg.basis[c]) == 3 * m - len(b) and alg.mult[k].get(c) == {w: alg.field.one}:
            return c
    return None
