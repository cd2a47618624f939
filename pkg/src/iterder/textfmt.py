"""Canonical text form of polynomials and fractions, and a parser for it.

Terms are written in descending degree joined by ``+``, powers with ``^``,
and fractions as ``(num)/(den)``. Coefficients from GF(2^m) use the
generator symbol ``w``; a coefficient with several terms is parenthesised
and joined to its monomial with ``*``, e.g. ``(w+1)*t^2+t+w``.

The parser accepts the general expression language (``+ - * / ^`` and
parentheses) over the symbols ``t x z s w`` and the digits ``0``/``1``, and
evaluates it in whichever structure the caller asks for, so any rendered
string parses back to the identical canonical value.
"""

import re

from .errors import ParseError
from .gf2m import GFElem
from .poly import ring_for
from .tower import RatFunc, TowerElem


def _mono(var, k):
    return "1" if k == 0 else var if k == 1 else "%s^%d" % (var, k)


def _join_coeff(coef, mono, multi):
    if mono == "1":
        return coef
    if coef == "1":
        return mono
    return ("(%s)" % coef if multi else coef) + "*" + mono


def render_poly(ring, p, var="t"):
    if not p:
        return "0"
    field = ring.field
    terms = []
    cs = ring.coeffs(p)
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if not c:
            continue
        cr = field.render(c)
        terms.append(_join_coeff(cr, _mono(var, k), "+" in cr))
    return "+".join(terms)


def render_ratfunc(r):
    num = render_poly(r.ring, r.num, r.var)
    if r.den == 1:
        return num
    return "(%s)/(%s)" % (num, render_poly(r.ring, r.den, r.var))


def _render_xpoly(p):
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c.num:
            continue
        cr = render_ratfunc(c)
        multi = "+" in cr or "/" in cr
        terms.append(_join_coeff(cr, _mono("x", k), multi))
    return "+".join(terms)


def render_tower(e):
    num = _render_xpoly(e.num)
    if len(e.den) == 1 and e.den[0].is_one():
        return num
    return "(%s)/(%s)" % (num, _render_xpoly(e.den))


def render_field(u):
    a = render_tower(u.a)
    if not u.b.num:
        return a
    b = render_tower(u.b)
    bz = _join_coeff(b, "z", "+" in b or "/" in b)
    return bz if a == "0" else "%s+%s" % (a, bz)


def field_to_json(u):
    return {"a": render_tower(u.a), "b": render_tower(u.b)}


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z_]\w*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError("cannot tokenize %r at %d" % (text, pos))
        num, name, op = mt.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        elif op.strip():
            if op not in "+-*/^()":
                raise ParseError("unexpected character %r in %r" % (op, text))
            toks.append(("op", op))
        pos = mt.end()
    return toks


class _Parser:
    def __init__(self, text, env, const):
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env
        self.const = const
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ParseError("expected %r in %r" % (op, self.text))

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError("trailing input in %r" % self.text)
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            self.take()
            v = v + self.term()
        return v

    def term(self):
        v = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.power()
            try:
                v = v * rhs if op == "*" else v / rhs
            except ZeroDivisionError as exc:
                raise ParseError("division by zero in %r" % self.text) from exc
        return v

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer in %r" % self.text)
            v = v ** n
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.const(val & 1)
        if kind == "name":
            if val not in self.env:
                raise ParseError("unknown symbol %r in %r" % (val, self.text))
            return self.env[val]
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        if (kind, val) == ("op", "-"):
            return self.atom()
        raise ParseError("unexpected token %r in %r" % (val, self.text))


def parse_gf(text, field):
    env = {"w": GFElem(field, 2)} if field.m > 1 else {}
    return _Parser(text, env, lambda c: GFElem(field, c)).parse()


def parse_ratfunc(text, m=1, var="t"):
    ring = ring_for(m)
    env = {var: RatFunc.gen(ring, var)}
    if m > 1:
        env["w"] = RatFunc.const(ring, 2, var)
    return _Parser(text, env, lambda c: RatFunc.const(ring, c, var)).parse()


def parse_choice(text):
    """A free term: a rational function in ``s``, or in ``t`` when it names t."""
    var = "t" if "t" in text and "s" not in text else "s"
    return parse_ratfunc(text, var=var)


def parse_tower(text, m=1):
    ring = ring_for(m)
    env = {"t": TowerElem.gen_t(ring), "x": TowerElem.gen_x(ring)}
    if m > 1:
        env["w"] = TowerElem.const(ring, 2)
    return _Parser(text, env, lambda c: TowerElem.const(ring, c)).parse()


def parse_field(text, m=1):
    from .field import FieldElem

    env = {"t": FieldElem.t(m), "x": FieldElem.x(m), "z": FieldElem.z(m)}
    if m > 1:
        env["w"] = FieldElem.const(2, m)
    return _Parser(text, env, lambda c: FieldElem.const(c, m)).parse()


def field_from_json(obj, m=1):
    from .field import FieldElem

    if isinstance(obj, str):
        return parse_field(obj, m)
    try:
        a, b = obj["a"], obj["b"]
    except (KeyError, TypeError) as exc:
        raise ParseError("field element must be {'a': ..., 'b': ...}") from exc
    return FieldElem(parse_tower(a, m), parse_tower(b, m))
