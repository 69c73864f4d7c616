"""Independent reference computations used to freeze expected values.

These deliberately share no code with the package beyond the relation
list: paths are enumerated here, the ideal is spanned by all two-sided
multiples ``u*r*v`` and ranks come from a separate elimination routine.
"""

import numpy as np


def _paths(arrows, vertices, max_len):
    """All paths as ``(source, names, target)`` of length at most ``max_len``."""
    out = [(v, (), v) for v in vertices]
    layer = list(out)
    for _ in range(max_len):
        nxt = [(s, names + (a,), t2) for s, names, t in layer for a, s2, t2 in arrows if s2 == t]
        out += nxt
        layer = nxt
    return out


def quotient_dimension(pres, cutoff):
    """``dim KQ/I`` computed in the span of paths of length ``<= cutoff``.

    Words longer than ``cutoff`` are dropped, so this is the dimension of
    ``KQ/(I + paths longer than cutoff)``.  For an admissible ideal it is
    ``dim KQ/I`` as soon as every path of length ``cutoff`` lies in the
    truncated ideal; the second return value is the dimension of the image
    of those paths in the quotient, which must be 0.
    """
    q, fld = pres.quiver, pres.field
    arrows = [(a.name, a.source, a.target) for a in q.arrows]
    paths = _paths(arrows, q.vertices, cutoff)
    by_end = {}
    for s, names, t in paths:
        by_end.setdefault((s, t), []).append(names)
    rels = [(r.endpoints(), {p.arrows: c for p, c in r.terms.items()}) for r in pres.relations]
    total, long_left = 0, 0
    for (s, t), cols in by_end.items():
        col = {w: k for k, w in enumerate(cols)}
        rows = []
        for (rs, rt), terms in rels:
            for u in by_end.get((s, rs), ()):
                for v in by_end.get((rt, t), ()):
                    row = [0] * len(cols)
                    for w, c in terms.items():
                        k = col.get(u + w + v)
                        if k is not None:
                            row[k] = c
                    if any(row):
                        rows.append(row)
        rank = _rank(fld, rows, len(cols))
        total += len(cols) - rank
        # paths of length cutoff together with the ideal
        long_rows = rows + [[1 if k == j else 0 for k in range(len(cols))]
                            for j, w in enumerate(cols) if len(w) == cutoff]
        long_left += _rank(fld, long_rows, len(cols)) - rank
    return total, long_left


def _rank(fld, rows, ncols):
    """Rank mod p by vectorised elimination (prime fields only)."""
    if not fld.is_prime:
        raise ValueError("the oracle works over prime fields")
    if not rows:
        return 0
    p = fld.p
    a = np.array(rows, dtype=np.int64) % p
    rank = 0
    for c in range(ncols):
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != rank]
        a[others] = (a[others] - np.outer(a[others, c], a[rank])) % p
        rank += 1
        if rank == a.shape[0]:
            break
    return rank
