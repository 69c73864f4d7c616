"""Quivers, paths and the triangulation quiver of the tetrahedron."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True)
class Arrow:
    name: str
    source: object
    target: object


@dataclass(frozen=True)
class Path:
    """A path ``source --arrows--> target``; arrows are stored by name.

    The trivial path at ``v`` has no arrows and stands for the idempotent e_v.
    """

    source: object
    arrows: tuple
    target: object

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


@dataclass
class Quiver:
    vertices: list
    arrows: list  # of Arrow, in declaration order

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow ids")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} references an unknown vertex")

    @cached_property
    def arrow(self) -> dict:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrow_index(self) -> dict:
        return {a.name: k for k, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def outgoing(self, v) -> list:
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v) -> list:
        return [a for a in self.arrows if a.target == v]

    def source(self, name: str):
        return self.arrow[name].source

    def target(self, name: str):
        return self.arrow[name].target

    def trivial(self, v) -> Path:
        if v not in self.vertex_index:
            raise ValueError(f"unknown vertex {v!r}")
        return Path(v, (), v)

    def path(self, *names: str) -> Path:
        """Build a path from arrow names, checking composability."""
        if not names:
            raise ValueError("use trivial(v) for a path of length zero")
        for n in names:
            if n not in self.arrow:
                raise KeyError(f"unknown arrow {n!r}")
        for a, b in zip(names, names[1:]):
            if self.arrow[a].target != self.arrow[b].source:
                raise ValueError(f"arrows {a} and {b} do not compose")
        return Path(self.arrow[names[0]].source, tuple(names), self.arrow[names[-1]].target)

    def concat(self, p: Path, q: Path) -> Path | None:
        """``p`` followed by ``q``, or None when they do not meet."""
        if p.target != q.source:
            return None
        return Path(p.source, p.arrows + q.arrows, q.target)

    def path_key(self, p: Path) -> tuple:
        """Length-lexicographic sort key."""
        idx = self.arrow_index
        return (len(p), self.vertex_index[p.source], tuple(idx[a] for a in p.arrows))


@dataclass
class TriangulationQuiver:
    quiver: Quiver
    f: dict  # arrow name -> arrow name
    bar: dict
    g: dict = field(default=None)

    def __post_init__(self):
        if self.g is None:
            self.g = {a: self.bar[self.f[a]] for a in self.f}

    def orbits(self, perm: dict) -> list:
        seen, out = set(), []
        for a in (x.name for x in self.quiver.arrows):
            if a in seen:
                continue
            orb, b = [], a
            while b not in seen:
                seen.add(b)
                orb.append(b)
                b = perm[b]
            out.append(tuple(orb))
        return out


TETRAHEDRAL_ARROWS = [
    ("alpha", 3, 1),
    ("beta", 4, 2),
    ("gamma", 4, 1),
    ("delta", 1, 5),
    ("epsilon", 2, 5),
    ("eta", 5, 4),
    ("mu", 6, 3),
    ("nu", 1, 6),
    ("xi", 5, 3),
    ("rho", 2, 6),
    ("sigma", 3, 2),
    ("omega", 6, 4),
]

# shaded triangles, each listed as theta -> f(theta) -> f^2(theta)
TETRAHEDRAL_F_ORBITS = [
    ("nu", "mu", "alpha"),
    ("delta", "eta", "gamma"),
    ("omega", "beta", "rho"),
    ("epsilon", "xi", "sigma"),
]


def tetrahedral_quiver() -> TriangulationQuiver:
    q = Quiver(list(range(1, 7)), [Arrow(n, s, t) for n, s, t in TETRAHEDRAL_ARROWS])
    f = {}
    for orb in TETRAHEDRAL_F_ORBITS:
        for k, a in enumerate(orb):
            f[a] = orb[(k + 1) % 3]
    bar = {}
    for v in q.vertices:
        a, b = (x.name for x in q.outgoing(v))
        bar[a], bar[b] = b, a
    return TriangulationQuiver(q, f, bar)


def validate_triangulation(tq: TriangulationQuiver) -> list[str]:
    """Return the list of violated conditions (empty when valid)."""
    q = tq.quiver
    names = [a.name for a in q.arrows]
    failures = []
    for label, perm in (("f", tq.f), ("bar", tq.bar), ("g", tq.g)):
        if sorted(perm) != sorted(names) or sorted(perm.values()) != sorted(names):
            failures.append(f"{label} is not a permutation of the arrows")
    if failures:
        return failures
    for v in q.vertices:
        if len(q.outgoing(v)) != 2 or len(q.incoming(v)) != 2:
            failures.append(f"2-regularity fails at vertex {v}")
    for a in names:
        if tq.f[tq.f[tq.f[a]]] != a:
            failures.append(f"f^3 != identity at {a}")
            break
    for a in names:
        if q.target(a) != q.source(tq.f[a]):
            failures.append(f"f({a}) does not start where {a} ends")
            break
    for a in names:
        b = tq.bar[a]
        if b == a or tq.bar[b] != a or q.source(a) != q.source(b):
            failures.append(f"bar is not a fixed-point-free source-preserving involution at {a}")
            break
    for a in names:
        if tq.g[a] != tq.bar[tq.f[a]]:
            failures.append("g != bar∘f")
            break
    return failures


def enumerate_paths(q: Quiver, start=None, end=None, max_len: int = 0,
                    exact_len: int | None = None) -> list[Path]:
    """All paths with the given endpoints (None means any) and length.

    Paths are returned in length-lexicographic order.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    top = exact_len if exact_len is not None else max_len
    starts = q.vertices if start is None else [start]
    layer = [q.trivial(v) for v in starts]
    out = []
    for length in range(top + 1):
        if exact_len is None or length == exact_len:
            out.extend(p for p in layer if end is None or p.target == end)
        if length == top:
            break
        layer = [Path(p.source, p.arrows + (a.name,), a.target)
                 for p in layer for a in q.outgoing(p.target)]
    out.sort(key=q.path_key)
    return out
