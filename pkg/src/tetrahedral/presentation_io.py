"""Reading and writing presentations as text.

A presentation file is a list of lines; blank lines and ``#`` comments are
ignored.  Header lines are ``key: value`` pairs::

    name: Lambda(2,1)
    field: fp:1000003
    m: 2
    lambda: 1
    length_bound: 6
    vertices: 1 2 3 4 5 6
    arrow alpha: 3 -> 1
    weight epsilon: 0
    relation: gamma*delta = beta*epsilon + l*(beta*rho*omega)^1*beta*epsilon

A relation is ``lhs = rhs`` or a single expression meaning ``expr = 0``.
Terms are products separated by ``*`` of scalars (integers, ``a/b``, and
``l`` for the value of ``lambda``), arrow names, trivial paths ``e_v`` and
parenthesised products, each optionally raised to a power ``^k``.
Whitespace is ignored inside relations.
"""

from __future__ import annotations

import re

from .path_algebra import FreeElement, Presentation
from .quiver import Arrow, Path, Quiver
from .scalars import Field


class PresentationSyntaxError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.col, self.message = line, col, message


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*^()=]))")


def _tokens(text: str, line: int, offset: int) -> list:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            col = offset + len(text[:pos]) + (len(text[pos:]) - len(text[pos:].lstrip())) + 1
            raise PresentationSyntaxError(line, col, f"unexpected character {text[pos:].lstrip()[0]!r}")
        kind = mt.lastgroup
        col = offset + mt.start(kind) + 1
        out.append((kind, mt.group(kind), col))
        pos = mt.end()
    return out


def _parse_vertex(tok: str):
    return int(tok) if tok.isdigit() else tok


class _RelationParser:
    """Recursive descent over one relation line."""

    def __init__(self, toks, line, quiver: Quiver, fld: Field, lam, end_col):
        self.toks, self.k, self.line = toks, 0, line
        self.q, self.fld, self.lam = quiver, fld, lam
        self.end_col = end_col

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else None

    def error(self, message, tok=None):
        tok = tok or self.peek()
        col = tok[2] if tok else self.end_col
        raise PresentationSyntaxError(self.line, col, message)

    def take(self, value=None):
        tok = self.peek()
        if tok is None or (value is not None and tok[1] != value):
            self.error(f"expected {value!r}" if value else "unexpected end of relation")
        self.k += 1
        return tok

    def relation(self) -> FreeElement:
        lhs = self.expression()
        tok = self.peek()
        if tok is not None and tok[1] == "=":
            self.take("=")
            rhs = self.expression()
            lhs = lhs - rhs
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}")
        return lhs

    def expression(self) -> FreeElement:
        total = FreeElement.zero(self.fld)
        sign = self.fld.one
        first = True
        while True:
            tok = self.peek()
            if tok is not None and tok[1] in "+-" and tok[0] == "op":
                self.take()
                sign = self.fld.neg(sign) if tok[1] == "-" else sign
            elif not first:
                break
            total = total + self.term(sign)
            sign = self.fld.one
            first = False
            tok = self.peek()
            if tok is None or tok[1] not in "+-":
                break
        return total

    def term(self, sign) -> FreeElement:
        coeff = sign
        path = None
        while True:
            c, p, tok = self.factor()
            coeff = self.fld.mul(coeff, c)
            if p is not None:
                path = p if path is None else self._concat(path, p, tok)
            nxt = self.peek()
            if nxt is None or nxt[1] != "*":
                break
            self.take("*")
        if path is None:
            self.error("term has no path", tok)
        return FreeElement.path(self.fld, path, coeff)

    def _concat(self, a: Path, b: Path, tok) -> Path:
        if a.target != b.source:
            self.error(f"path {a} does not compose with {b}", tok)
        return Path(a.source, a.arrows + b.arrows, b.target)

    def factor(self):
        """Returns ``(scalar, path or None, first token)``."""
        tok = self.peek()
        if tok is None:
            self.error("expected a factor")
        if tok[1] == "(":
            self.take("(")
            coeff, path = self.fld.one, None
            while True:
                c, p, t = self.factor()
                coeff = self.fld.mul(coeff, c)
                if p is not None:
                    path = p if path is None else self._concat(path, p, t)
                if self.peek() is not None and self.peek()[1] == "*":
                    self.take("*")
                    continue
                break
            self.take(")")
        elif tok[0] == "num":
            self.take()
            coeff, path = self.fld.parse_value(tok[1]), None
        elif tok[0] == "name":
            self.take()
            coeff, path = self.fld.one, None
            if tok[1] == "l":
                if self.lam is None:
                    self.error("'l' used but no lambda header given", tok)
                coeff = self.lam
            elif tok[1].startswith("e_") and tok[1] not in self.q.arrow:
                v = _parse_vertex(tok[1][2:])
                if v not in self.q.vertex_index:
                    self.error(f"unknown vertex {tok[1][2:]!r}", tok)
                path = self.q.trivial(v)
            elif tok[1] in self.q.arrow:
                a = self.q.arrow[tok[1]]
                path = Path(a.source, (a.name,), a.target)
            else:
                self.error(f"unknown arrow {tok[1]!r}", tok)
        else:
            self.error(f"unexpected {tok[1]!r}", tok)
        if self.peek() is not None and self.peek()[1] == "^":
            self.take("^")
            exp = self.take()
            if exp[0] != "num" or "/" in exp[1] or int(exp[1]) < 1:
                self.error("exponent must be a positive integer", exp)
            n = int(exp[1])
            coeff = self.fld.pow(coeff, n)
            if path is not None:
                if n > 1 and path.source != path.target:
                    self.error(f"power of the non-cyclic path {path}", exp)
                path = Path(path.source, path.arrows * n, path.target)
        return coeff, path, tok


_HEADER = re.compile(r"^(?P<key>[A-Za-z_]+)(?:\s+(?P<arg>[A-Za-z][A-Za-z0-9_]*))?\s*:(?P<val>.*)$")


def parse_presentation(text: str) -> Presentation:
    header: dict = {}
    vertices = None
    arrows: list = []
    weights: dict = {}
    rel_lines: list = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        mt = _HEADER.match(line.strip())
        lead = len(line) - len(line.lstrip())
        if not mt:
            raise PresentationSyntaxError(ln, lead + 1, "expected 'key: value'")
        key, arg, val = mt.group("key"), mt.group("arg"), mt.group("val")
        val_col = lead + mt.start("val") + 1
        if key == "arrow":
            parts = val.split("->")
            if arg is None or len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise PresentationSyntaxError(ln, val_col, "expected 'arrow NAME: SOURCE -> TARGET'")
            arrows.append((arg, _parse_vertex(parts[0].strip()), _parse_vertex(parts[1].strip()), ln))
        elif key == "weight":
            try:
                weights[arg] = int(val.strip())
            except (TypeError, ValueError):
                raise PresentationSyntaxError(ln, val_col, "weight must be an integer") from None
        elif key == "relation":
            rel_lines.append((ln, val, val_col - 1))
        elif key == "vertices":
            vertices = [_parse_vertex(v) for v in val.split()]
        elif key in ("name", "field", "m", "lambda", "length_bound"):
            header[key] = (val.strip(), ln, val_col)
        else:
            raise PresentationSyntaxError(ln, lead + 1, f"unknown key {key!r}")
    if vertices is None:
        raise PresentationSyntaxError(1, 1, "missing 'vertices' line")
    try:
        fld = Field.parse(header["field"][0]) if "field" in header else Field.prime()
    except ValueError as exc:
        raise PresentationSyntaxError(header["field"][1], header["field"][2], str(exc)) from None

    def integer(key):
        if key not in header:
            return None
        val, ln, col = header[key]
        if not re.fullmatch(r"\d+", val):
            raise PresentationSyntaxError(ln, col, f"{key} must be a non-negative integer")
        return int(val)

    m = integer("m")
    bound = integer("length_bound")
    if bound is None:
        if m is None:
            raise PresentationSyntaxError(1, 1, "missing 'length_bound' line")
        bound = 3 * m
    lam = None
    if "lambda" in header:
        val, ln, col = header["lambda"]
        try:
            lam = fld.parse_value(val)
        except (ValueError, ZeroDivisionError) as exc:
            raise PresentationSyntaxError(ln, col, f"bad lambda: {exc}") from None
    try:
        quiver = Quiver(vertices, [Arrow(n, s, t) for n, s, t, _ in arrows])
    except ValueError as exc:
        raise PresentationSyntaxError(arrows[-1][3] if arrows else 1, 1, str(exc)) from None
    for name in weights:
        if name not in quiver.arrow:
            raise PresentationSyntaxError(1, 1, f"weight given for unknown arrow {name!r}")
    relations = []
    for ln, body, offset in rel_lines:
        toks = _tokens(body, ln, offset)
        parser = _RelationParser(toks, ln, quiver, fld, lam, offset + len(body) + 1)
        rel = parser.relation()
        start = toks[0][2] if toks else offset + 1
        if not rel:
            raise PresentationSyntaxError(ln, start, "relation is zero")
        if rel.endpoints() is None:
            raise PresentationSyntaxError(ln, start, "terms do not share source and target")
        relations.append(rel)
    name = header["name"][0] if "name" in header else ""
    return Presentation(quiver, relations, fld, bound, m=m, lam=lam,
                        weights=weights or None, name=name)


def emit_presentation(pres: Presentation) -> str:
    fld = pres.field
    q = pres.quiver
    lines = []
    if pres.name:
        lines.append(f"name: {pres.name}")
    lines.append(f"field: {fld}")
    if pres.m is not None:
        lines.append(f"m: {pres.m}")
    if pres.lam is not None:
        lines.append(f"lambda: {fld.to_str(pres.lam)}")
    lines.append(f"length_bound: {pres.length_bound}")
    lines.append("vertices: " + " ".join(str(v) for v in q.vertices))
    for a in q.arrows:
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    for a, w in (pres.weights or {}).items():
        lines.append(f"weight {a}: {w}")
    for r in pres.relations:
        lines.append(f"relation: {r.to_str(q)}")
    return "\n".join(lines) + "\n"
