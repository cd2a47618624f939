"""Group law on x^3 = z^2 + z with neutral element (0, 0).

Two independent routes are provided. ``sub_lemma61`` is the closed
difference formula for the translated law. ``std_add`` is the ordinary
chord-tangent law on Y^2 + Y = X^3 with neutral point at infinity; the
translated law is recovered from it as P (+) Q = P + Q - N with N = (0, 0).

Formulas run over any coefficient ring described by a ``FieldOps``; elements
only need ``+``, ``*`` and ``==``.
"""

from .errors import NonInvertibleDenominator, NotOnCurve
from .gf2m import GFElem


class FieldOps:
    """add/mul come from the element operators; this supplies the rest."""

    def __init__(self, one, name=""):
        self.one = one
        self.zero = one.zero_like()
        self.name = name

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return not a.is_zero()

    def inv(self, a):
        if not self.is_unit(a):
            raise NonInvertibleDenominator("%s is not invertible in %s" % (a, self.name or "the coefficient ring"))
        return a.inv()

    def elem(self, v):
        return v


class GFOps(FieldOps):
    def __init__(self, field):
        super().__init__(GFElem(field, 1), repr(field))
        self.field = field

    def elem(self, v):
        return v if isinstance(v, GFElem) else GFElem(self.field, v)


class SeriesOps(FieldOps):
    """Truncated series: units are the series with nonzero constant term."""

    def __init__(self, one):
        super().__init__(one, "series ring")

    def is_unit(self, a):
        return not a[0].is_zero()


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("infinity")


INFINITY = _Infinity()


class AffinePoint:
    __slots__ = ("x", "z")

    def __init__(self, x, z, check=True):
        if check and x * x * x != z * z + z:
            raise NotOnCurve("(%s, %s) is not on z^2+z=x^3" % (x, z))
        self.x = x
        self.z = z

    def __eq__(self, other):
        return isinstance(other, AffinePoint) and self.x == other.x and self.z == other.z

    def __hash__(self):
        return hash((self.x, self.z))

    def __repr__(self):
        return "AffinePoint(%s, %s)" % (self.x, self.z)

    def __iter__(self):
        yield self.x
        yield self.z


def on_curve(P):
    return P is INFINITY or P.x * P.x * P.x == P.z * P.z + P.z


def neutral(ops):
    return AffinePoint(ops.zero, ops.zero, check=False)


def neg(P, ops):
    """The translated-law inverse (x/(1+z), z/(1+z))."""
    d = ops.inv(ops.one + P.z)
    return AffinePoint(P.x * d, P.z * d, check=False)


def sub_lemma61(P1, P2, ops):
    """P1 (-) P2 by the closed difference formula."""
    x1, z1 = P1
    x2, z2 = P2
    d = ops.inv(ops.one + z1)
    nx = x1 * d
    nz = z1 * d
    lam = (z2 + nz) * ops.inv(x2 + nx)
    xd = x2 + nx + lam * lam
    zd = lam * (xd + x2) + z2
    return AffinePoint(xd, zd, check=False)


# -- standard model, neutral at infinity -----------------------------------


def std_neg(P, ops):
    if P is INFINITY:
        return P
    return AffinePoint(P.x, P.z + ops.one, check=False)


def std_add(P, Q, ops):
    """Complete chord-tangent addition on Y^2 + Y = X^3."""
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == y2:
            lam = x1 * x1
        elif y1 + y2 == ops.one:
            return INFINITY
        else:
            raise NonInvertibleDenominator("x-coordinates agree but points are neither equal nor opposite")
    else:
        lam = (y1 + y2) * ops.inv(x1 + x2)
    x3 = lam * lam + x1 + x2
    y3 = lam * (x1 + x3) + y1 + ops.one
    return AffinePoint(x3, y3, check=False)


def translated_op(P, Q, op, ops):
    """The law with neutral (0,0): add is P+Q-N, sub is P-Q+N (standard law)."""
    N = neutral(ops)
    if op == "add":
        return std_add(std_add(P, Q, ops), std_neg(N, ops), ops)
    if op == "sub":
        return std_add(std_add(P, std_neg(Q, ops), ops), N, ops)
    raise ValueError("op must be 'add' or 'sub'")


def translated_neg(P, ops):
    """(-)P = 2N - P in the standard law; defined everywhere."""
    N = neutral(ops)
    return std_add(std_add(N, N, ops), std_neg(P, ops), ops)


def mul_n(P, n, ops):
    """[n]P under the translated law by double-and-add."""
    if n < 1:
        raise ValueError("n must be positive")
    result = neutral(ops)
    base = P
    while n:
        if n & 1:
            result = translated_op(result, base, "add", ops)
        n >>= 1
        if n:
            base = translated_op(base, base, "add", ops)
    return result


def points_over(field):
    """All projective points of x^3 = z^2 + z over GF(2^m), infinity last."""
    roots = {}
    for zv in range(field.order):
        roots.setdefault(field.mul(zv, zv) ^ zv, []).append(zv)
    pts = []
    for xv in range(field.order):
        rhs = field.mul(field.mul(xv, xv), xv)
        for zv in roots.get(rhs, ()):
            pts.append(AffinePoint(GFElem(field, xv), GFElem(field, zv), check=False))
    pts.append(INFINITY)
    return pts


# -- serialization -----------------------------------------------------------


def point_to_json(P, render):
    if P is INFINITY:
        return "infinity"
    return {"x": render(P.x), "z": render(P.z)}


def point_from_json(obj, parse):
    if obj == "infinity":
        return INFINITY
    if isinstance(obj, str):
        s = obj.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("point must be 'infinity', '(x,z)' or {'x':..,'z':..}")
        parts = _split_top(s[1:-1])
        if len(parts) != 2:
            raise ValueError("point %r must have two coordinates" % obj)
        return AffinePoint(parse(parts[0]), parse(parts[1]))
    return AffinePoint(parse(obj["x"]), parse(obj["z"]))


def _split_top(s):
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return parts
