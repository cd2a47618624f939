"""The function field L = C(t)(x)[z]/(z^2 + z + x^3).

Elements are ``a + b*z`` with ``a, b`` in C(t)(x); ``z^2`` is always rewritten
as ``z + x^3`` so the representation never carries a higher z-power.
"""

from functools import lru_cache

from .errors import DivisionByZero, NotInSubfield
from .poly import ring_for
from .tower import RatFunc, TowerElem


@lru_cache(maxsize=None)
def _x_cubed(ring):
    zero = RatFunc._raw(ring, 0, 1)
    one = RatFunc._raw(ring, 1, 1)
    return TowerElem._raw(ring, (zero, zero, zero, one), (one,))


def _times_x3(a):
    """a * x^3 with a cheap path for polynomial a."""
    if not a.num:
        return a
    if len(a.den) == 1:
        zero = RatFunc._raw(a.ring, 0, 1)
        return TowerElem._raw(a.ring, (zero,) * 3 + a.num, a.den)
    return a * _x_cubed(a.ring)


class FieldElem:
    __slots__ = ("a", "b")

    def __init__(self, a, b=None):
        if isinstance(a, RatFunc):
            a = TowerElem.from_ratfunc(a)
        if b is None:
            b = a.zero_like()
        elif isinstance(b, RatFunc):
            b = TowerElem.from_ratfunc(b)
        self.a = a
        self.b = b

    @property
    def ring(self):
        return self.a.ring

    # -- constructors ----------------------------------------------------
    @classmethod
    def x(cls, m=1):
        return cls(TowerElem.gen_x(ring_for(m)))

    @classmethod
    def z(cls, m=1):
        ring = ring_for(m)
        return cls(TowerElem.const(ring, 0), TowerElem.const(ring, 1))

    @classmethod
    def t(cls, m=1):
        return cls(TowerElem.gen_t(ring_for(m)))

    @classmethod
    def const(cls, c, m=1):
        return cls(TowerElem.const(ring_for(m), c))

    def zero_like(self):
        z = self.a.zero_like()
        return FieldElem(z, z)

    def one_like(self):
        return FieldElem(self.a.one_like(), self.a.zero_like())

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return not self.a.num and not self.b.num

    def is_one(self):
        return not self.b.num and self.a.is_one()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return not self.b.num and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        from .textfmt import render_field

        return "FieldElem(%s)" % render_field(self)

    def __str__(self):
        from .textfmt import render_field

        return render_field(self)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FieldElem):
            other = _coerce(other, self)
            if other is None:
                return NotImplemented
        return FieldElem(self.a + other.a, self.b + other.b)

    __sub__ = __add__
    __radd__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (RatFunc, TowerElem)):
                return self.scale(other)
            if isinstance(other, int):
                return self if other & 1 else self.zero_like()
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if not b1.num and not b2.num:
            return FieldElem(a1 * a2, b1)
        if not b1.num:
            return FieldElem(a1 * a2, a1 * b2)
        if not b2.num:
            return FieldElem(a1 * a2, a2 * b1)
        p = a1 * a2
        q = b1 * b2
        r = (a1 + b1) * (a2 + b2)
        return FieldElem(p + _times_x3(q), r + p)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by an element of C(t) or C(t)(x)."""
        if isinstance(c, RatFunc):
            return FieldElem(self.a.scale(c), self.b.scale(c))
        return FieldElem(self.a * c, self.b * c)

    def sqr(self):
        a2 = self.a.sqr()
        if not self.b.num:
            return FieldElem(a2, self.b)
        b2 = self.b.sqr()
        return FieldElem(a2 + _times_x3(b2), b2)

    def norm(self):
        """a^2 + a*b + b^2*x^3, the norm down to C(t)(x)."""
        a, b = self.a, self.b
        return a.sqr() + a * b + _times_x3(b.sqr())

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in L")
        if not self.b.num:
            return FieldElem(self.a.inv(), self.b)
        n = self.norm()
        if n.is_zero():
            raise AssertionError("vanishing norm of a nonzero element")
        ninv = n.inv()
        return FieldElem((self.a + self.b) * ninv, self.b * ninv)

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            other = _coerce(other, self)
        return self * other.inv()

    def __pow__(self, n):
        r = self.one_like()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b.sqr()
            n >>= 1
        return r

    def change_ring(self, ring):
        return FieldElem(self.a.change_ring(ring), self.b.change_ring(ring))

    # -- subfield membership ---------------------------------------------
    def is_in_Ct(self):
        return not self.b.num and self.a.in_base()

    def is_in_L2Ct(self):
        if not self.b.is_even_in_x():
            return False
        return (self.a + _times_x3(self.b)).is_even_in_x()

    def l2ct_decompose(self):
        """(alpha, beta) in C(t)(x^2) with self = alpha + beta*z^2."""
        beta = self.b
        alpha = self.a + _times_x3(beta)
        if not beta.is_even_in_x() or not alpha.is_even_in_x():
            raise NotInSubfield("element is not in L^2*C(t)")
        return alpha, beta

    def degrees(self):
        """(max x-degree, max numerator t-degree, max denominator t-degree)."""
        xd = max(max(self.a.x_degree()), max(self.b.x_degree()))
        tn1, td1 = self.a.t_degree()
        tn2, td2 = self.b.t_degree()
        return xd, max(tn1, tn2), max(td1, td2)


def _coerce(v, like):
    if isinstance(v, TowerElem):
        return FieldElem(v, v.zero_like())
    if isinstance(v, RatFunc):
        t = TowerElem.from_ratfunc(v)
        return FieldElem(t, t.zero_like())
    if isinstance(v, int):
        return like.one_like() if v & 1 else like.zero_like()
    return None


def recompose(alpha, beta):
    """alpha + beta*z^2 as a field element."""
    return FieldElem(alpha + _times_x3(beta), beta)


def even_tower(num_y, den_y, ring):
    """Build the C(t)(x) element num(x^2)/den(x^2) from y-polynomials."""
    zero = RatFunc._raw(ring, 0, 1)

    def spread(p):
        out = []
        for c in p:
            out.append(c)
            out.append(zero)
        return tuple(out[:-1]) if out else ()

    return TowerElem(ring, spread(num_y), spread(den_y))
