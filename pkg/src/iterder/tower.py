"""Normalized fractions: C(t) over packed polynomials, then C(t)(x) on top.

A ``RatFunc`` keeps ``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic.
A ``TowerElem`` is a fraction of polynomials in ``x`` whose coefficients are
``RatFunc``; it keeps the x-denominator monic and coprime to the numerator.
Both are immutable and every operation returns a reduced value, so ``==`` is
structural equality.
"""

from .errors import DivisionByZero
from .poly import ring_for


class RatFunc:
    __slots__ = ("ring", "num", "den", "var")

    def __init__(self, ring, num, den=1, var="t"):
        if not den:
            raise DivisionByZero("zero denominator")
        self.ring = ring
        self.var = var
        if den != 1:
            g = ring.gcd(num, den)
            if g != 1:
                num = ring.quo(num, g)
                den = ring.quo(den, g)
            lc = ring.lc(den)
            if lc != 1:
                inv = ring.field.inv(lc)
                num = ring.scale(num, inv)
                den = ring.scale(den, inv)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, ring, num, den, var="t"):
        r = object.__new__(cls)
        r.ring = ring
        r.num = num
        r.den = den
        r.var = var
        return r

    @classmethod
    def const(cls, ring, c, var="t"):
        return cls._raw(ring, c, 1, var)

    @classmethod
    def gen(cls, ring, var="t"):
        return cls._raw(ring, ring.monomial(1), 1, var)

    def zero_like(self):
        return RatFunc._raw(self.ring, 0, 1, self.var)

    def one_like(self):
        return RatFunc._raw(self.ring, 1, 1, self.var)

    def is_zero(self):
        return self.num == 0

    def is_one(self):
        return self.num == 1 and self.den == 1

    def is_poly(self):
        return self.den == 1

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den and self.ring == other.ring
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .textfmt import render_ratfunc

        return "RatFunc(%s)" % render_ratfunc(self)

    def __str__(self):
        from .textfmt import render_ratfunc

        return render_ratfunc(self)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        ring = self.ring
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1:
            return other
        if not n2:
            return self
        if d1 == d2:
            n = n1 ^ n2
            if d1 == 1 or not n:
                return RatFunc._raw(ring, n, 1 if not n else d1, self.var)
            g = ring.gcd(n, d1)
            if g == 1:
                return RatFunc._raw(ring, n, d1, self.var)
            return RatFunc._raw(ring, ring.quo(n, g), ring.quo(d1, g), self.var)
        if d1 == 1:
            return RatFunc._raw(ring, ring.mul(n1, d2) ^ n2, d2, self.var)
        if d2 == 1:
            return RatFunc._raw(ring, n1 ^ ring.mul(n2, d1), d1, self.var)
        g = ring.gcd(d1, d2)
        if g == 1:
            n = ring.mul(n1, d2) ^ ring.mul(n2, d1)
            return RatFunc._raw(ring, n, ring.mul(d1, d2), self.var)
        e1 = ring.quo(d1, g)
        e2 = ring.quo(d2, g)
        n = ring.mul(n1, e2) ^ ring.mul(n2, e1)
        if not n:
            return RatFunc._raw(ring, 0, 1, self.var)
        h = ring.gcd(n, g)
        if h != 1:
            n = ring.quo(n, h)
            g = ring.quo(g, h)
        return RatFunc._raw(ring, n, ring.mul(ring.mul(e1, e2), g), self.var)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, int):
                return self if other & 1 else self.zero_like()
            return NotImplemented
        ring = self.ring
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1 or not n2:
            return RatFunc._raw(ring, 0, 1, self.var)
        if d1 == 1 and d2 == 1:
            return RatFunc._raw(ring, ring.mul(n1, n2), 1, self.var)
        if d2 != 1:
            g = ring.gcd(n1, d2)
            if g != 1:
                n1 = ring.quo(n1, g)
                d2 = ring.quo(d2, g)
        if d1 != 1:
            g = ring.gcd(n2, d1)
            if g != 1:
                n2 = ring.quo(n2, g)
                d1 = ring.quo(d1, g)
        return RatFunc._raw(ring, ring.mul(n1, n2), ring.mul(d1, d2), self.var)

    __rmul__ = __mul__

    def sqr(self):
        ring = self.ring
        return RatFunc._raw(ring, ring.sqr(self.num), ring.sqr(self.den), self.var)

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        ring = self.ring
        num, den = self.den, self.num
        lc = ring.lc(den)
        if lc != 1:
            inv = ring.field.inv(lc)
            num = ring.scale(num, inv)
            den = ring.scale(den, inv)
        return RatFunc._raw(ring, num, den, self.var)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n):
        ring = self.ring
        return RatFunc._raw(ring, ring.pow(self.num, n), ring.pow(self.den, n), self.var)

    def scale_const(self, c):
        return RatFunc._raw(self.ring, self.ring.scale(self.num, c), self.den, self.var) if c else self.zero_like()

    def inflate(self, e, var=None):
        """r(v^e), optionally renaming the variable."""
        ring = self.ring
        return RatFunc._raw(ring, ring.inflate(self.num, e), ring.inflate(self.den, e), var or self.var)

    def rename(self, var):
        return RatFunc._raw(self.ring, self.num, self.den, var)

    def change_ring(self, ring):
        """Embed GF(2)-coefficients into a larger GF(2^m)."""
        if ring == self.ring:
            return self
        src = self.ring
        if src.m != 1:
            raise ValueError("only GF(2) coefficients can be embedded")
        return RatFunc._raw(ring, ring.from_coeffs(src.coeffs(self.num)), ring.from_coeffs(src.coeffs(self.den)), self.var)

    def degrees(self):
        return self.ring.deg(self.num), self.ring.deg(self.den)

    def taylor(self, order):
        """Coefficients of r(t+T) modulo T^(order+1), as a list of RatFunc."""
        ring = self.ring
        nums = ring.hasse_all(self.num, order)
        if self.den == 1:
            return [RatFunc._raw(ring, n, 1, self.var) for n in nums]
        dens = ring.hasse_all(self.den, order)
        # series inverse of den(t+T), constant term den
        inv0 = RatFunc._raw(ring, 1, self.den, self.var)
        dcoef = [RatFunc._raw(ring, d, 1, self.var) for d in dens]
        inv = [inv0]
        for n in range(1, order + 1):
            acc = self.zero_like()
            for k in range(1, n + 1):
                if dcoef[k].num:
                    acc = acc + dcoef[k] * inv[n - k]
            inv.append(acc * inv0)
        ncoef = [RatFunc._raw(ring, v, 1, self.var) for v in nums]
        out = []
        for n in range(order + 1):
            acc = self.zero_like()
            for k in range(n + 1):
                if ncoef[k].num:
                    acc = acc + ncoef[k] * inv[n - k]
            out.append(acc)
        return out

    def is_square_field_member(self):
        """True iff r lies in C(var^2)."""
        ring = self.ring
        p0, p1 = ring.parity_parts(self.num)
        q0, q1 = ring.parity_parts(self.den)
        return ring.mul(p1, q0) == ring.mul(p0, q1)


def rf_const(ring, c, var="t"):
    return RatFunc._raw(ring, c, 1, var)


# --------------------------------------------------------------------------
# dense polynomials in x over C(t): tuples of RatFunc, no trailing zeros


def _strip(p):
    n = len(p)
    while n and not p[n - 1].num:
        n -= 1
    return tuple(p[:n]) if n != len(p) else tuple(p)


def xadd(p, q):
    if len(p) < len(q):
        p, q = q, p
    if not q:
        return p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return _strip(out)


def xmul(p, q):
    if not p or not q:
        return ()
    if len(q) == 1:
        return xscale(p, q[0])
    if len(p) == 1:
        return xscale(q, p[0])
    zero = p[0].zero_like()
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a.num:
            continue
        for j, b in enumerate(q):
            if b.num:
                out[i + j] = out[i + j] + a * b
    return _strip(out)


def xscale(p, c):
    if not c.num:
        return ()
    if c.num == 1 and c.den == 1:
        return p
    return tuple(a * c for a in p)


def xdivmod(p, q):
    dq = len(q) - 1
    if dq < 0:
        raise DivisionByZero("polynomial division by zero")
    r = list(p)
    zero = q[0].zero_like()
    if len(r) <= dq:
        return (), tuple(r)
    inv_lc = None if q[-1].is_one() else q[-1].inv()
    quo = [zero] * (len(r) - dq)
    for s in range(len(r) - 1 - dq, -1, -1):
        c = r[s + dq]
        if not c.num:
            continue
        if inv_lc is not None:
            c = c * inv_lc
        quo[s] = c
        for i, b in enumerate(q):
            if b.num:
                r[s + i] = r[s + i] + c * b
    return _strip(quo), _strip(r[:dq])


def xmonic(p):
    if not p or p[-1].is_one():
        return p
    inv = p[-1].inv()
    return tuple(a * inv for a in p[:-1]) + (p[-1].one_like(),)


def xval(p):
    """x-adic valuation of a nonzero polynomial."""
    for i, c in enumerate(p):
        if c.num:
            return i
    return len(p)


def _is_monomial(p):
    return all(not c.num for c in p[:-1])


def xgcd(p, q):
    """Monic gcd over C(t)."""
    if not p:
        return xmonic(q)
    if not q:
        return xmonic(p)
    if len(p) == 1 or len(q) == 1:
        return (p[0].one_like(),)
    if _is_monomial(q):
        k = min(len(q) - 1, xval(p))
        return tuple([p[0].zero_like()] * k + [p[0].one_like()])
    if _is_monomial(p):
        k = min(len(p) - 1, xval(q))
        return tuple([p[0].zero_like()] * k + [p[0].one_like()])
    while q:
        p, q = q, xdivmod(p, q)[1]
    return xmonic(p)


def xquo(p, q):
    if len(q) == 1 and q[0].is_one():
        return p
    if _is_monomial(q):
        k = len(q) - 1
        inv = None if q[-1].is_one() else q[-1].inv()
        out = p[k:]
        return xscale(out, inv) if inv is not None else out
    return xdivmod(p, q)[0]


class TowerElem:
    """Element of C(t)(x): ``num(x)/den(x)`` over C(t)."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den=None):
        num = _strip(tuple(num))
        one = RatFunc._raw(ring, 1, 1)
        if den is None:
            den = (one,)
        den = _strip(tuple(den))
        if not den:
            raise DivisionByZero("zero denominator in C(t)(x)")
        self.ring = ring
        if not num:
            self.num, self.den = (), (one,)
            return
        if len(den) > 1:
            g = xgcd(num, den)
            if len(g) > 1:
                num = xquo(num, g)
                den = xquo(den, g)
        if not den[-1].is_one():
            inv = den[-1].inv()
            num = xscale(num, inv)
            den = xmonic(den)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, ring, num, den):
        r = object.__new__(cls)
        r.ring = ring
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_ratfunc(cls, r):
        one = r.one_like()
        return cls._raw(r.ring, (r,) if r.num else (), (one,))

    @classmethod
    def const(cls, ring, c):
        return cls.from_ratfunc(RatFunc._raw(ring, c, 1))

    @classmethod
    def gen_x(cls, ring):
        zero = RatFunc._raw(ring, 0, 1)
        one = RatFunc._raw(ring, 1, 1)
        return cls._raw(ring, (zero, one), (one,))

    @classmethod
    def gen_t(cls, ring):
        return cls.from_ratfunc(RatFunc.gen(ring))

    def zero_like(self):
        return TowerElem._raw(self.ring, (), (RatFunc._raw(self.ring, 1, 1),))

    def one_like(self):
        one = RatFunc._raw(self.ring, 1, 1)
        return TowerElem._raw(self.ring, (one,), (one,))

    def is_zero(self):
        return not self.num

    def is_one(self):
        return len(self.num) == 1 and len(self.den) == 1 and self.num[0].is_one()

    def is_poly(self):
        return len(self.den) == 1

    def x_degree(self):
        """(numerator degree, denominator degree) in x."""
        return len(self.num) - 1, len(self.den) - 1

    def in_base(self):
        """True iff the element is x-free, i.e. lies in C(t)."""
        return len(self.num) <= 1 and len(self.den) == 1

    def base_value(self):
        return self.num[0] if self.num else RatFunc._raw(self.ring, 0, 1)

    def __eq__(self, other):
        if isinstance(other, TowerElem):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return (other & 1 and self.is_one()) or (not other & 1 and not self.num)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .textfmt import render_tower

        return "TowerElem(%s)" % render_tower(self)

    def __str__(self):
        from .textfmt import render_tower

        return render_tower(self)

    def _norm_against(self, num, den):
        # num, den already coprime except for a possible common factor
        if not num:
            return self.zero_like()
        if len(den) == 1:
            return TowerElem._raw(self.ring, num, den)
        g = xgcd(num, den)
        if len(g) > 1:
            num = xquo(num, g)
            den = xquo(den, g)
        return TowerElem._raw(self.ring, num, den)

    def __add__(self, other):
        if not isinstance(other, TowerElem):
            if isinstance(other, RatFunc):
                other = TowerElem.from_ratfunc(other)
            else:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            return self._norm_against(xadd(self.num, other.num), d1)
        if len(d1) == 1:
            return TowerElem._raw(self.ring, xadd(xmul(self.num, d2), other.num), d2)
        if len(d2) == 1:
            return TowerElem._raw(self.ring, xadd(self.num, xmul(other.num, d1)), d1)
        g = xgcd(d1, d2)
        if len(g) == 1:
            num = xadd(xmul(self.num, d2), xmul(other.num, d1))
            if not num:
                return self.zero_like()
            return TowerElem._raw(self.ring, num, xmul(d1, d2))
        e1 = xquo(d1, g)
        e2 = xquo(d2, g)
        num = xadd(xmul(self.num, e2), xmul(other.num, e1))
        if not num:
            return self.zero_like()
        h = xgcd(num, g)
        if len(h) > 1:
            num = xquo(num, h)
            g = xquo(g, h)
        return TowerElem._raw(self.ring, num, xmul(xmul(e1, e2), g))

    __sub__ = __add__
    __radd__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, TowerElem):
            if isinstance(other, RatFunc):
                return self.scale(other)
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1 or not n2:
            return self.zero_like()
        if len(d1) == 1 and len(d2) == 1:
            return TowerElem._raw(self.ring, xmul(n1, n2), d1)
        if len(d2) > 1 and len(n1) > 1:
            g = xgcd(n1, d2)
            if len(g) > 1:
                n1 = xquo(n1, g)
                d2 = xquo(d2, g)
        if len(d1) > 1 and len(n2) > 1:
            g = xgcd(n2, d1)
            if len(g) > 1:
                n2 = xquo(n2, g)
                d1 = xquo(d1, g)
        num = xmul(n1, n2)
        den = xmul(d1, d2)
        if not den[-1].is_one():
            inv = den[-1].inv()
            num = xscale(num, inv)
            den = xmonic(den)
        return TowerElem._raw(self.ring, num, den)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by an element of C(t); no x-gcd is needed."""
        if not c.num or not self.num:
            return self.zero_like()
        return TowerElem._raw(self.ring, xscale(self.num, c), self.den)

    def sqr(self):
        return TowerElem._raw(
            self.ring, tuple(c.sqr() for c in _interleave(self.num)), tuple(c.sqr() for c in _interleave(self.den))
        )

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero in C(t)(x)")
        num, den = self.den, self.num
        if not den[-1].is_one():
            inv = den[-1].inv()
            num = xscale(num, inv)
            den = xmonic(den)
        return TowerElem._raw(self.ring, num, den)

    def __truediv__(self, other):
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

    def parity_parts(self):
        """Even/odd split of numerator and denominator in x."""
        zero = RatFunc._raw(self.ring, 0, 1)

        def split(p):
            ev = _strip(tuple(c if i % 2 == 0 else zero for i, c in enumerate(p)))
            od = _strip(tuple(p[i] for i in range(1, len(p), 2)))
            return ev, od

        return split(self.num), split(self.den)

    def is_even_in_x(self):
        """True iff the element lies in C(t)(x^2)."""
        (p0, p1), (q0, q1) = self.parity_parts()
        if not p1 and not q1:
            return True
        # p0, q0 here still carry x-exponents; compare p1*q0 and p0*q1 directly
        return xmul(_halve_even(p0), q1) == xmul(p1, _halve_even(q0))

    def even_part_in_xsq(self):
        """For an element of C(t)(x^2), return (num, den) as polynomials in y = x^2."""
        if not self.is_even_in_x():
            raise ValueError("not in C(t)(x^2)")
        (p0, p1), (q0, q1) = self.parity_parts()
        if not p1 and not q1:
            return _halve_even(p0), _halve_even(q0)
        # num/den = p0/q0 = p1/q1 with coprime num, den forces odd parts zero
        raise AssertionError("reduced element with odd parts cannot be even")

    def change_ring(self, ring):
        if ring == self.ring:
            return self
        return TowerElem._raw(ring, tuple(c.change_ring(ring) for c in self.num), tuple(c.change_ring(ring) for c in self.den))

    def t_degree(self):
        """Max numerator / denominator t-degree over all coefficients."""
        nd = dd = 0
        for c in self.num + self.den:
            a, b = c.degrees()
            nd = max(nd, a)
            dd = max(dd, b)
        return nd, dd

    def coeff_count(self):
        return sum(1 for c in self.num if c.num) + sum(1 for c in self.den if c.num)


def _interleave(p):
    if not p:
        return ()
    zero = p[0].zero_like()
    out = []
    for c in p:
        out.append(c)
        out.append(zero)
    return tuple(out[:-1])


def _halve_even(p):
    return tuple(p[i] for i in range(0, len(p), 2))


def base_ring(m=1):
    return ring_for(m)
