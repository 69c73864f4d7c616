"""Path-algebra elements, presentations, and the quotient basis construction.

The quotient ``KQ/I`` is computed one source vertex at a time: the right
ideal ``e_i I`` is spanned by ``u*r*v`` with ``u`` a path starting at ``i``
and ``r`` a relation, so it is the right closure of the elements ``u*r``.
Everything lives in the finite space of paths of weight at most
``length_bound + headroom``; paths beyond that are truncated away.  The
result is *certified* by checking that every path of weight
``length_bound + 1`` reduces to zero inside that space.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .basis_algebra import BasisAlgebra, structure_constants
from .quiver import Path, Quiver, TriangulationQuiver, tetrahedral_quiver
from .scalars import Field, Scalar


class AdmissibilityError(RuntimeError):
    """Raised when the truncated ideal does not contain all long paths."""


# ------------------------------------------------------------ free elements


@dataclass
class FreeElement:
    """A finite linear combination of paths with raw field coefficients."""

    field: Field
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {p: self.field.canon(c) for p, c in self.terms.items()
                      if self.field.canon(c)}

    @classmethod
    def path(cls, fld: Field, p: Path, c=1) -> "FreeElement":
        return cls(fld, {p: c})

    @classmethod
    def zero(cls, fld: Field) -> "FreeElement":
        return cls(fld, {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FreeElement) and self.field == other.field
                and self.terms == other.terms)

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = self.field.add(out.get(p, self.field.zero), c)
        return FreeElement(self.field, out)

    def __neg__(self):
        return FreeElement(self.field, {p: self.field.neg(c) for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FreeElement":
        c = c.value if isinstance(c, Scalar) else self.field.canon(c)
        return FreeElement(self.field, {p: self.field.mul(c, v) for p, v in self.terms.items()})

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        out: dict = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                if p.target != q.source:
                    continue
                pq = Path(p.source, p.arrows + q.arrows, q.target)
                out[pq] = self.field.add(out.get(pq, self.field.zero), self.field.mul(a, b))
        return FreeElement(self.field, out)

    def endpoints(self):
        """The common (source, target) of all terms, or None."""
        ends = {(p.source, p.target) for p in self.terms}
        return next(iter(ends)) if len(ends) == 1 else None

    def min_length(self) -> int:
        return min(len(p) for p in self.terms)

    def sorted_terms(self, quiver: Quiver) -> list:
        return sorted(self.terms.items(), key=lambda pc: quiver.path_key(pc[0]))

    def to_str(self, quiver: Quiver) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.sorted_terms(quiver):
            neg = False
            if self.field.is_prime and c > self.field.p // 2:
                c, neg = self.field.neg(c), True
            elif not self.field.is_prime and c < 0:
                c, neg = -c, True
            coeff = "" if c == 1 else self.field.to_str(c) + "*"
            parts.append(("- " if neg else "+ ") + coeff + str(p))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]


def word(quiver: Quiver, fld: Field, *names: str, coeff=1) -> FreeElement:
    return FreeElement.path(fld, quiver.path(*names), coeff)


# ------------------------------------------------------------ presentations


@dataclass
class Presentation:
    """A quiver with a finite list of relations.

    ``weights`` assigns each arrow a weight (default 1).  Weight-0 arrows
    must be loops carrying a rule ``loop^2 = c*loop`` among the relations;
    the quotient construction builds those rules into the ambient space.
    ``length_bound`` is the expected nilpotency degree in weight.
    """

    quiver: Quiver
    relations: list
    field: Field
    length_bound: int
    m: int | None = None
    lam: object = None  # raw field value or None
    weights: dict | None = None
    name: str = ""

    def weight(self, name: str) -> int:
        return 1 if self.weights is None else self.weights.get(name, 1)

    def path_weight(self, p: Path) -> int:
        return sum(self.weight(a) for a in p.arrows)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.quiver.vertices == other.quiver.vertices
                and self.quiver.arrows == other.quiver.arrows
                and self.relations == other.relations
                and self.field == other.field
                and self.length_bound == other.length_bound
                and self.m == other.m and self.lam == other.lam
                and (self.weights or {}) == (other.weights or {}))


# arrows theta whose relation mu_theta carries the lambda correction term
LAMBDA_CORRECTED = ("gamma", "rho", "xi")


def cycle_power(tq: TriangulationQuiver, theta: str, k: int) -> tuple:
    """Arrow names of ``(theta f(theta) f^2(theta))^k``."""
    f = tq.f
    return (theta, f[theta], f[f[theta]]) * k


def mu_relation(tq: TriangulationQuiver, theta: str, m: int, lam, fld: Field) -> FreeElement:
    """The relation whose f-term is ``theta f(theta)``, as left minus right."""
    q = tq.quiver
    f, g, bar = tq.f, tq.g, tq.bar
    tb = bar[theta]
    rel = word(q, fld, theta, f[theta]) - word(q, fld, tb, g[tb])
    if theta in LAMBDA_CORRECTED:
        corr = cycle_power(tq, tb, m - 1) + (tb, g[tb])
        rel = rel - word(q, fld, *corr, coeff=lam)
    return rel


def zero_relation(tq: TriangulationQuiver, theta: str, m: int, fld: Field) -> FreeElement:
    f, g = tq.f, tq.g
    names = cycle_power(tq, theta, m - 1) + (theta, f[theta], g[f[theta]])
    return word(tq.quiver, fld, *names)


def tetrahedral_relations(m: int, lam=0, fld: Field | None = None) -> Presentation:
    """The 24 defining relations of the higher tetrahedral algebra.

    The first twelve are the relations ``mu_theta`` (one per arrow, in arrow
    order), the last twelve the zero relations.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    fld = fld or Field.prime()
    if isinstance(lam, Scalar):
        if lam.field != fld:
            raise ValueError("lambda lives in a different field")
        lam = lam.value
    lam = fld.canon(lam)
    tq = tetrahedral_quiver()
    names = [a.name for a in tq.quiver.arrows]
    rels = [mu_relation(tq, a, m, lam, fld) for a in names]
    rels += [zero_relation(tq, a, m, fld) for a in names]
    return Presentation(tq.quiver, rels, fld, 3 * m, m=m, lam=lam,
                        name=f"Lambda({m},{fld.to_str(lam)})")


# ------------------------------------------------------- quotient basis


def _loop_rules(pres: Presentation) -> tuple[dict, list]:
    """Split off the ``loop^2 = c*loop`` rules of weight-0 loops."""
    q, fld = pres.quiver, pres.field
    zero_wt = [a.name for a in q.arrows if pres.weight(a.name) == 0]
    for a in zero_wt:
        if q.source(a) != q.target(a):
            raise ValueError(f"weight-0 arrow {a} must be a loop")
    per_vertex = [q.source(a) for a in zero_wt]
    if len(set(per_vertex)) != len(per_vertex):
        raise ValueError("at most one weight-0 loop per vertex is supported")
    rules, rest = {}, []
    for r in pres.relations:
        support = {p.arrows for p in r.terms}
        loop = next((a for a in zero_wt if (a, a) in support
                     and support <= {(a, a), (a,)}), None)
        if loop is None:
            rest.append(r)
            continue
        sq = r.terms[q.path(loop, loop)]
        lin = r.terms.get(q.path(loop), fld.zero)
        rules[loop] = fld.neg(fld.div(lin, sq))
    missing = [a for a in zero_wt if a not in rules]
    if missing:
        raise ValueError(f"weight-0 loops {missing} need a rule loop^2 = c*loop")
    for r in rest:
        for p in r.terms:
            if pres.path_weight(p) == 0 and len(p) > 0:
                raise ValueError("relations may not contain weight-0 terms besides loop rules")
    return rules, rest


class _Ambient:
    """Reduced words from one source vertex up to a weight bound."""

    def __init__(self, pres: Presentation, source, top: int, rules: dict):
        q = pres.quiver
        self.quiver = q
        self.field = pres.field
        self.rules = rules
        wt = {a.name: pres.weight(a.name) for a in q.arrows}
        out = {v: sorted(q.outgoing(v), key=lambda a: q.arrow_index[a.name])
               for v in q.vertices}
        aidx = q.arrow_index
        # breadth-first by length; extending a sorted layer by arrows in
        # declaration order keeps length-lexicographic order for free.
        # Each entry remembers its parent word and last arrow.
        words = []  # (weight, arrows, target, parent, arrow)
        layer = [(0, (), source, -1, None)]
        while layer:
            base = len(words)
            words.extend(layer)
            nxt = []
            for off, (w, arrows, v, _, last) in enumerate(layer):
                for a in out[v]:
                    if a.name in rules and a.name == last:
                        continue
                    nw = w + wt[a.name]
                    if nw <= top:
                        nxt.append((nw, arrows + (a.name,), a.target, base + off, a.name))
            layer = nxt
        order = list(range(len(words)))
        if rules or any(wt[a] != 1 for a in wt):
            order.sort(key=lambda i: (words[i][0], len(words[i][1]),
                                      tuple(aidx[a] for a in words[i][1])))
        new_id = [0] * len(words)
        for k, i in enumerate(order):
            new_id[i] = k
        self.weight = [words[i][0] for i in order]
        self.words = [words[i][1] for i in order]
        self.target = [words[i][2] for i in order]
        self.id = {a: k for k, a in enumerate(self.words)}
        one = self.field.one
        self.child = [dict() for _ in words]
        for i, (_, _, _, parent, a) in enumerate(words):
            if parent >= 0:
                self.child[new_id[parent]][a] = (new_id[i], one)
        for k, arrows in enumerate(self.words):
            last = arrows[-1] if arrows else None
            if last in rules and rules[last]:
                self.child[k][last] = (k, rules[last])

    def walk(self, k: int, arrows) -> tuple | None:
        """Multiply word ``k`` by a sequence of arrows: ``(id, coeff)``."""
        c = self.field.one
        mul = self.field.mul
        for a in arrows:
            step = self.child[k].get(a)
            if step is None:
                return None
            k, d = step
            if d != 1:
                c = mul(c, d)
        return k, c

    def times(self, vec: dict, arrows) -> dict:
        fld = self.field
        out: dict = {}
        for k, v in vec.items():
            step = self.walk(k, arrows)
            if step is None:
                continue
            j, c = step
            nv = fld.add(out.get(j, fld.zero), fld.mul(v, c))
            if nv:
                out[j] = nv
            else:
                out.pop(j)
        return out


def _vertex_quotient(pres: Presentation, source, top: int, rules: dict, rels: list):
    """Echelon form of ``e_source I`` truncated at weight ``top``."""
    from .linalg import SparseEchelon

    amb = _Ambient(pres, source, top, rules)
    fld = pres.field
    add, mul = fld.add, fld.mul
    ech = SparseEchelon(fld)
    child = amb.child
    by_source: dict = {}
    for r in rels:
        s = next(iter(r.terms)).source
        by_source.setdefault(s, []).append([(p.arrows, c, pres.path_weight(p))
                                            for p, c in r.terms.items()])
    queue: deque = deque()
    for k in range(len(amb.words)):
        room = top - amb.weight[k]
        for terms in by_source.get(amb.target[k], ()):
            seed: dict = {}
            for arrows, c, w in terms:
                if w > room:
                    continue
                j = k
                for a in arrows:
                    step = child[j].get(a)
                    if step is None:
                        break
                    j, d = step
                    if d != 1:
                        c = mul(c, d)
                else:
                    nv = add(seed.get(j, 0), c)
                    if nv:
                        seed[j] = nv
                    else:
                        seed.pop(j)
            if seed:
                row = ech.add(seed)
                if row is not None:
                    queue.append(row)
    p = fld.p if fld.is_prime else 0
    while queue:
        row = queue.popleft()
        prods: dict = {}
        for k, c in row.items():
            for a, (j, d) in child[k].items():
                vec = prods.get(a)
                if vec is None:
                    vec = prods[a] = {}
                x = c if d == 1 else c * d
                nv = (vec.get(j, 0) + x) % p if p else vec.get(j, 0) + x
                if nv:
                    vec[j] = nv
                else:
                    del vec[j]
        for vec in prods.values():
            if vec:
                new = ech.add(vec, copy=False)
                if new is not None:
                    queue.append(new)
    # normal forms by back-substitution, in increasing word order
    nf: list = [None] * len(amb.words)
    for k in range(len(amb.words)):
        prow = ech.pivots.get(k)
        if prow is None:
            nf[k] = {k: fld.one}
            continue
        acc: dict = {}
        for j, c in prow.items():
            if j == k:
                continue
            for b, d in nf[j].items():
                nv = fld.sub(acc.get(b, fld.zero), fld.mul(c, d))
                if nv:
                    acc[b] = nv
                else:
                    acc.pop(b)
        nf[k] = acc
    return amb, ech, nf


def quotient_basis(pres: Presentation, headroom: int = 2) -> BasisAlgebra:
    """Basis, structure constants and normal forms of ``KQ/I``.

    Raises :class:`AdmissibilityError` if some path of weight
    ``length_bound + 1`` is not certified to lie in the ideal.
    """
    if headroom < 1:
        raise ValueError("headroom must be at least 1")
    q, fld = pres.quiver, pres.field
    bound = pres.length_bound
    top = bound + headroom
    rules, rels = _loop_rules(pres)
    for r in rels:
        if r.endpoints() is None:
            raise ValueError(f"relation {r.to_str(q)} has no common source and target")
    data = {}
    failures = []
    for v in q.vertices:
        amb, ech, nf = _vertex_quotient(pres, v, top, rules, rels)
        data[v] = (amb, nf)
        for k, w in enumerate(amb.weight):
            # weight bound+1 must vanish; nothing heavier may survive either
            if w > bound and (nf[k] if w == bound + 1 else k not in ech.pivots):
                failures.append(Path(v, amb.words[k], amb.target[k]))
    if failures:
        raise AdmissibilityError(
            f"{len(failures)} paths of weight > {bound} not certified in the ideal "
            f"at headroom {headroom}, e.g. {failures[0]}")

    aidx = q.arrow_index
    vidx = q.vertex_index
    labels = []
    for v in q.vertices:
        amb, nf = data[v]
        for k in range(len(amb.words)):
            if amb.weight[k] <= bound and nf[k] == {k: fld.one}:
                labels.append((amb.weight[k], len(amb.words[k]), vidx[v],
                               tuple(aidx[a] for a in amb.words[k]), v, k))
    labels.sort()
    basis = []
    local_to_global = {}
    for g, (_, _, _, _, v, k) in enumerate(labels):
        amb = data[v][0]
        basis.append(Path(v, amb.words[k], amb.target[k]))
        local_to_global[(v, k)] = g

    cache: dict = {}

    def path_nf(p: Path) -> dict:
        hit = cache.get(p)
        if hit is not None:
            return hit
        if pres.path_weight(p) > bound:
            res: dict = {}
        else:
            amb, nf = data[p.source]
            step = amb.walk(amb.id[()], p.arrows)
            if step is None:
                res = {}
            else:
                k, c = step
                res = {local_to_global[(p.source, b)]: fld.mul(c, d) for b, d in nf[k].items()}
        cache[p] = res
        return res

    mult = structure_constants(basis, path_nf, q)
    info = {"headroom": headroom, "weight_bound": bound, "ambient_top": top,
            "certified": True,
            "ambient_sizes": {v: len(data[v][0].words) for v in q.vertices}}
    return BasisAlgebra(q, fld, basis, mult, path_nf, name=pres.name, info=info)


def normal_form(alg: BasisAlgebra, x: FreeElement) -> dict:
    """Coordinates of ``x`` in the basis of ``alg``."""
    return alg.element(x)


def stabilization_check(pres: Presentation, headroom: int = 2) -> dict:
    """Compare quotient dimensions at ``headroom`` and ``headroom + 1``."""
    a = quotient_basis(pres, headroom)
    b = quotient_basis(pres, headroom + 1)
    grade = lambda alg: sorted((pres.path_weight(p), str(p.source), str(p.target)) for p in alg.basis)
    return {"dim": a.dim, "dim_next": b.dim, "stable": grade(a) == grade(b)}
