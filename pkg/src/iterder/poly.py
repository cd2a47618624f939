"""Univariate polynomials over GF(2^m), packed into Python ints.

Coefficient ``k`` occupies bits ``[k*m, (k+1)*m)``. Over GF(2) this is the
usual bit-per-coefficient encoding and multiplication is carry-less. For
m > 1 products and scalings act on bit planes, so they also reduce to
carry-less multiplies and XORs. Addition is XOR throughout and the zero
polynomial is ``0``.
"""

from .gf2m import GF2, get_field

_SPREAD = [
    int("".join(b + "0" for b in format(i, "08b"))[:-1], 2).to_bytes(2, "little")
    for i in range(256)
]


def lucas_binom(i, j):
    """C(i+j, i) mod 2: odd exactly when i and j share no binary digit."""
    return 0 if i & j else 1


def clmul(a, b):
    """Carry-less product of two GF(2)[t] polynomials."""
    if a.bit_length() > b.bit_length():
        a, b = b, a
    if a < 16:
        r = 0
        while a:
            if a & 1:
                r ^= b
            a >>= 1
            b <<= 1
        return r
    b2 = b << 1
    b4 = b << 2
    b8 = b << 3
    table = (
        0, b, b2, b2 ^ b, b4, b4 ^ b, b4 ^ b2, b4 ^ b2 ^ b,
        b8, b8 ^ b, b8 ^ b2, b8 ^ b2 ^ b, b8 ^ b4, b8 ^ b4 ^ b, b8 ^ b4 ^ b2, b8 ^ b4 ^ b2 ^ b,
    )
    r = 0
    shift = 0
    while a:
        r ^= table[a & 15] << shift
        a >>= 4
        shift += 4
    return r


def clsqr(a):
    """Square of a GF(2)[t] polynomial (bit interleave)."""
    if a < 2:
        return a
    data = a.to_bytes((a.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join([_SPREAD[c] for c in data]), "little")


class PolyRing:
    """Operations on packed polynomials over one binary field.

    All methods take and return raw ints; the ring object only carries the
    field and cached bit masks.
    """

    def __init__(self, field):
        self.field = field
        self.m = field.m
        self._masks = {}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("PolyRing", self.field.m))

    def __repr__(self):
        return "PolyRing(%r)" % self.field

    # -- structure -------------------------------------------------------
    def deg(self, p):
        return (p.bit_length() - 1) // self.m if p else -1

    def coeff(self, p, k):
        m = self.m
        return (p >> (k * m)) & ((1 << m) - 1)

    def lc(self, p):
        return self.coeff(p, self.deg(p)) if p else 0

    def coeffs(self, p):
        """Dense ascending coefficient list; empty for zero."""
        m = self.m
        mask = (1 << m) - 1
        return [(p >> (k * m)) & mask for k in range(self.deg(p) + 1)]

    def from_coeffs(self, cs):
        m = self.m
        r = 0
        for k, c in enumerate(cs):
            if c:
                r |= c << (k * m)
        return r

    def monomial(self, k, c=1):
        return c << (k * self.m) if c else 0

    def const(self, c):
        return c

    # -- bit planes (m > 1) ----------------------------------------------
    # Plane i collects bit i of every slot, left in place at bit k*m. A map
    # on GF(2^m) that is GF(2)-linear acts on planes with big-int XORs.
    def _ones(self, nbits):
        ones = self._masks.get("ones")
        if ones is None or ones.bit_length() + self.m <= nbits:
            slots = max(2 * (nbits // self.m + 1), 64)
            ones = ((1 << (self.m * slots)) - 1) // ((1 << self.m) - 1)
            self._masks["ones"] = ones
        return ones

    def _planes(self, p):
        ones = self._ones(p.bit_length())
        return [(p >> i) & ones for i in range(self.m)]

    def _apply_linear(self, planes, images):
        """Recombine planes after plane i is sent to the field element images[i]."""
        r = 0
        for j in range(self.m):
            acc = 0
            for i, img in enumerate(images):
                if (img >> j) & 1:
                    acc ^= planes[i]
            if acc:
                r ^= acc << j
        return r

    def _scale_images(self, c):
        key = ("scale", c)
        imgs = self._masks.get(key)
        if imgs is None:
            imgs = [self.field.mul(c, 1 << i) for i in range(self.m)]
            self._masks[key] = imgs
        return imgs

    # -- arithmetic ------------------------------------------------------
    def scale(self, p, c):
        if c == 1 or not p:
            return p
        if c == 0:
            return 0
        return self._apply_linear(self._planes(p), self._scale_images(c))

    def mul(self, a, b):
        if self.m == 1:
            return clmul(a, b)
        if not a or not b:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        m = self.m
        pa = self._planes(a)
        pb = self._planes(b)
        if m == 2:
            c0 = clmul(pa[0], pb[0])
            c2 = clmul(pa[1], pb[1])
            prods = [c0, clmul(pa[0] ^ pa[1], pb[0] ^ pb[1]) ^ c0 ^ c2, c2]
        else:
            prods = [0] * (2 * m - 1)
            for i, x in enumerate(pa):
                if x:
                    for j, y in enumerate(pb):
                        if y:
                            prods[i + j] ^= clmul(x, y)
        # w^k for k >= m folds back through the field
        r = 0
        for k, v in enumerate(prods):
            if not v:
                continue
            wk = self.field.pow(2, k)
            j = 0
            while wk:
                if wk & 1:
                    r ^= v << j
                wk >>= 1
                j += 1
        return r

    def sqr(self, a):
        if self.m == 1:
            return clsqr(a)
        if not a:
            return 0
        key = ("sqr",)
        imgs = self._masks.get(key)
        if imgs is None:
            imgs = [self.field.sqr(1 << i) for i in range(self.m)]
            self._masks[key] = imgs
        planes = self._planes(a)
        r = 0
        for j in range(self.m):
            acc = 0
            for i, img in enumerate(imgs):
                if (img >> j) & 1:
                    acc ^= planes[i]
            if acc:
                # bits sit at k*m; clsqr moves them to 2*k*m
                r ^= clsqr(acc) << j
        return r

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if self.m == 1:
            db = b.bit_length()
            q = 0
            while True:
                da = a.bit_length()
                if da < db:
                    return q, a
                s = da - db
                q |= 1 << s
                a ^= b << s
        m = self.m
        db = self.deg(b)
        if self.deg(a) < db:
            return 0, a
        inv_lc = self.field.inv(self.lc(b))
        fmul = self.field.mul
        mask = (1 << m) - 1
        low = db * m
        multiples = {}
        q = 0
        while a:
            top = (a.bit_length() - 1) // m * m
            if top < low:
                break
            c = fmul((a >> top) & mask, inv_lc)
            q |= c << (top - low)
            bc = multiples.get(c)
            if bc is None:
                bc = multiples[c] = self.scale(b, c)
            a ^= bc << (top - low)
        return q, a

    def mod(self, a, b):
        if self.m == 1:
            if not b:
                raise ZeroDivisionError("polynomial division by zero")
            db = b.bit_length()
            while True:
                da = a.bit_length()
                if da < db:
                    return a
                a ^= b << (da - db)
        return self.divmod(a, b)[1]

    def quo(self, a, b):
        return self.divmod(a, b)[0]

    def monic(self, p):
        if self.m == 1 or not p:
            return p
        return self.scale(p, self.field.inv(self.lc(p)))

    def gcd(self, a, b):
        """Monic gcd."""
        if self.m == 1:
            if a == 1 or b == 1:
                return 1
            while b:
                db = b.bit_length()
                while True:
                    da = a.bit_length()
                    if da < db:
                        break
                    a ^= b << (da - db)
                a, b = b, a
            return a
        while b:
            a, b = b, self.mod(a, b)
        return self.monic(a)

    def pow(self, p, n):
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, p)
            p = self.sqr(p)
            n >>= 1
        return r

    def inflate(self, p, e):
        """p(t^e)."""
        if e == 1 or not p:
            return p
        m = self.m
        r = 0
        for k, c in enumerate(self.coeffs(p)):
            if c:
                r |= c << (k * e * m)
        return r

    def evaluate(self, p, v):
        """Horner evaluation at a field element."""
        r = 0
        mul = self.field.mul
        for c in reversed(self.coeffs(p)):
            r = mul(r, v) ^ c
        return r

    # -- char-2 structure ------------------------------------------------
    def _mask(self, b, width):
        """Mask of coefficient slots whose exponent has bit ``b`` set."""
        key = b
        cached = self._masks.get(key)
        if cached is not None and cached.bit_length() >= width:
            return cached
        slot = self.m << b
        unit = ((1 << slot) - 1) << slot
        period = 2 * slot
        mask = unit
        span = period
        while span < max(width, 1) + period:
            mask |= mask << span
            span *= 2
        self._masks[key] = mask
        return mask

    def hasse_pow2(self, p, b):
        """Hasse derivative D^(2^b): keep exponents with bit b set, shift down."""
        if not p:
            return 0
        return (p & self._mask(b, p.bit_length())) >> (self.m << b)

    def hasse_all(self, p, n):
        """[D^(0) p, ..., D^(n) p]; these are the T-coefficients of p(t+T)."""
        out = [p]
        for k in range(1, n + 1):
            low = k & -k
            out.append(self.hasse_pow2(out[k - low], low.bit_length() - 1))
        return out

    def parity_parts(self, p):
        """(p0, p1) with p = p0 + t*p1, both p0 and p1 even in t."""
        if not p:
            return 0, 0
        odd = p & self._mask(0, p.bit_length())
        return p ^ odd, odd >> self.m


def ring_for(m):
    return _RINGS.setdefault(m, PolyRing(get_field(m)))


_RINGS = {}
F2T = ring_for(1)

__all__ = ["lucas_binom", "clmul", "clsqr", "PolyRing", "ring_for", "F2T", "GF2"]
