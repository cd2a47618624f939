"""Binary finite fields GF(2^m).

Elements are plain ints below 2**m, read as polynomials in the generator
``w`` modulo a fixed irreducible. Zero and one are always 0 and 1, so an
element of GF(2) is also a valid element of every GF(2^m).
"""

from functools import lru_cache
import random

# Lexicographically least irreducible polynomial of each degree, as bit masks.
# Degree 1 is listed for completeness; GF(2) arithmetic never reduces.
MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


def _clmul_small(a, b):
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def _reduce(a, modulus):
    dm = modulus.bit_length()
    while a.bit_length() >= dm:
        a ^= modulus << (a.bit_length() - dm)
    return a


def is_irreducible(p):
    """Trial-division irreducibility test for a small GF(2) polynomial."""
    d = p.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _reduce(p, q) == 0:
            return False
    return True


def least_irreducible(m):
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("no irreducible polynomial of degree %d" % m)


class BinaryField:
    """GF(2^m) with log/antilog tables."""

    def __init__(self, m):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.m = m
        self.modulus = MODULI[m] if m in MODULI else least_irreducible(m)
        self.order = 1 << m
        self.mask = self.order - 1
        self._exp = None
        self._log = None
        if 1 < m <= 16:
            self._build_tables()

    def _build_tables(self):
        n = self.order - 1
        for g in range(2, self.order):
            exp = [0] * (2 * n)
            log = [0] * self.order
            v = 1
            ok = True
            for i in range(n):
                if i and v == 1:
                    ok = False
                    break
                exp[i] = v
                log[v] = i
                v = _reduce(_clmul_small(v, g), self.modulus)
            if ok and v == 1:
                for i in range(n, 2 * n):
                    exp[i] = exp[i - n]
                self._exp, self._log = exp, log
                return
        raise AssertionError("no primitive element found")

    def __eq__(self, other):
        return isinstance(other, BinaryField) and other.m == self.m

    def __hash__(self):
        return hash(("GF2m", self.m))

    def __repr__(self):
        return "GF(2^%d)" % self.m

    def mul(self, a, b):
        if not a or not b:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return _reduce(_clmul_small(a, b), self.modulus)

    def sqr(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        if a == 1:
            return 1
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def pow(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def elements(self):
        return range(self.order)

    def random(self, rng=random):
        return rng.randrange(self.order)

    def render(self, a):
        """Render an element with generator symbol ``w``, e.g. ``w^2+1``."""
        if a == 0:
            return "0"
        terms = []
        for k in range(a.bit_length() - 1, -1, -1):
            if (a >> k) & 1:
                terms.append("1" if k == 0 else "w" if k == 1 else "w^%d" % k)
        return "+".join(terms)

    def __call__(self, v):
        return GFElem(self, v)


@lru_cache(maxsize=None)
def get_field(m):
    return BinaryField(m)


GF2 = get_field(1)


class GFElem:
    """Operator-overloading wrapper used by the point arithmetic."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v & field.mask

    def __add__(self, other):
        return GFElem(self.field, self.v ^ other.v)

    __sub__ = __add__

    def __mul__(self, other):
        return GFElem(self.field, self.field.mul(self.v, other.v))

    def __truediv__(self, other):
        return GFElem(self.field, self.field.mul(self.v, self.field.inv(other.v)))

    def __pow__(self, n):
        return GFElem(self.field, self.field.pow(self.v, n))

    def inv(self):
        return GFElem(self.field, self.field.inv(self.v))

    def sqr(self):
        return GFElem(self.field, self.field.sqr(self.v))

    def zero_like(self):
        return GFElem(self.field, 0)

    def one_like(self):
        return GFElem(self.field, 1)

    def is_zero(self):
        return self.v == 0

    def __eq__(self, other):
        return isinstance(other, GFElem) and self.field == other.field and self.v == other.v

    def __hash__(self):
        return hash((self.field.m, self.v))

    def __repr__(self):
        return "GFElem(%s)" % self.field.render(self.v)

    def __str__(self):
        return self.field.render(self.v)
