"""Truncated power series in T of fixed order N (coefficients c_0..c_N).

Coefficients may be any of the exact element types (RatFunc, TowerElem,
FieldElem, GFElem); a product of a C(t)-series with an L-series is an
L-series.
"""

from .errors import BasePointNotOnCurve, NonUnitConstantTerm, OrderMismatch


class TPS:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = tuple(coeffs)

    @classmethod
    def constant(cls, value, order):
        zero = value.zero_like()
        return cls((value,) + (zero,) * order)

    @classmethod
    def from_terms(cls, terms, order, like):
        """Series from a dict {power: coefficient}; missing powers are zero."""
        zero = like.zero_like()
        return cls(terms.get(k, zero) for k in range(order + 1))

    @property
    def order(self):
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __getitem__(self, k):
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def __repr__(self):
        return "TPS(%s)" % ", ".join(str(v) for v in self.c)

    def __eq__(self, other):
        if not isinstance(other, TPS):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def _check(self, other):
        if len(other.c) != len(self.c):
            raise OrderMismatch("series orders differ: %d vs %d" % (self.order, other.order))

    def zero_like(self):
        z = self.c[0].zero_like()
        return TPS((z,) * len(self.c))

    def one_like(self):
        return TPS.constant(self.c[0].one_like(), self.order)

    def is_zero(self):
        return all(v.is_zero() for v in self.c)

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch("cannot extend a truncated series")
        return TPS(self.c[: order + 1])

    def __add__(self, other):
        if not isinstance(other, TPS):
            return NotImplemented
        self._check(other)
        return TPS(a + b for a, b in zip(self.c, other.c))

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, TPS):
            return TPS(a * other for a in self.c)
        self._check(other)
        n = len(self.c)
        a = self.c
        b = other.c
        nza = [k for k in range(n) if not a[k].is_zero()]
        nzb = [k for k in range(n) if not b[k].is_zero()]
        out = [None] * n
        for i in nza:
            ai = a[i]
            for j in nzb:
                k = i + j
                if k >= n:
                    break
                p = ai * b[j]
                out[k] = p if out[k] is None else out[k] + p
        if any(v is None for v in out):
            zero = (a[0] * b[0]).zero_like()
            out = [zero if v is None else v for v in out]
        return TPS(out)

    def __rmul__(self, other):
        return TPS(other * a for a in self.c)

    def sqr(self):
        """Char-2 squaring: (sum c_m T^m)^2 = sum c_m^2 T^(2m)."""
        n = len(self.c)
        zero = self.c[0].zero_like()
        out = [zero] * n
        for m in range(0, (n + 1) // 2):
            out[2 * m] = self.c[m].sqr()
        return TPS(out)

    def inv(self):
        c0 = self.c[0]
        if c0.is_zero():
            raise NonUnitConstantTerm("constant term is zero")
        r0 = c0.inv()
        r = [r0]
        nz = [k for k in range(1, len(self.c)) if not self.c[k].is_zero()]
        for n in range(1, len(self.c)):
            acc = None
            for k in nz:
                if k > n:
                    break
                p = self.c[k] * r[n - k]
                acc = p if acc is None else acc + p
            r.append(r0.zero_like() if acc is None else acc * r0)
        return TPS(r)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e):
        out = self.one_like()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base.sqr()
            e >>= 1
        return out

    def map(self, fn):
        return TPS(fn(v) for v in self.c)


def solve_artin_schreier(X, z0):
    """The series Z with Z(0) = z0 and Z^2 + Z = X^3 mod T^(N+1)."""
    x0 = X[0]
    if x0 * x0 * x0 != z0 * z0 + z0:
        raise BasePointNotOnCurve("(%s, %s) is not on z^2+z=x^3" % (x0, z0))
    X3 = X.sqr() * X
    zs = [z0]
    for m in range(1, len(X)):
        v = X3[m]
        if m % 2 == 0:
            v = v + zs[m // 2].sqr()
        zs.append(v)
    Z = TPS(zs)
    if Z.sqr() + Z != X3:
        raise AssertionError("Artin-Schreier recursion produced a non-solution")
    return Z
