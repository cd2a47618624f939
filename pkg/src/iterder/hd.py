"""Higher derivations on L, stored by their action on the generators.

An ``HDData`` holds xi_1..xi_N with theta(x) = x + sum xi_m T^m. The
z-coefficients are derived from the curve relation and theta(t) = t + T is
fixed. ``theta`` evaluates a field element at
(t+T, theta(x), theta(z)) in truncated series arithmetic.
"""

import hashlib
import json

from .errors import MembershipViolation, OrderExceeded, InsufficientData, NotInSubfield, ParseError
from .field import FieldElem
from .series import TPS, solve_artin_schreier
from .textfmt import field_to_json, field_from_json, render_ratfunc, parse_choice
from .poly import ring_for

CURVE_TAG = "z^2+z=x^3/F2"
FORMAT_VERSION = 1


class HDData:
    """A higher derivation on L extending the t-derivation of C(t).

    ``xi`` is the list xi_1..xi_N. With ``strict`` (the default) every xi_m
    must lie in L^2*C(t); pass ``strict=False`` to build deliberately broken
    instances for negative controls.
    """

    def __init__(self, xi, choices=(), strict=True, m=None):
        xi = tuple(xi)
        if m is None:
            m = xi[0].ring.m if xi else 1
        self.m = m
        self.ring = ring_for(m)
        self.xi = xi
        self.choices = tuple(choices)
        self.strict = strict
        if strict:
            for k, v in enumerate(xi, 1):
                if not v.is_in_L2Ct():
                    raise MembershipViolation("xi_%d = %s is not in L^2*C(t)" % (k, v))
        x = FieldElem.x(m)
        z = FieldElem.z(m)
        self.X = TPS((x,) + xi)
        self.Z = solve_artin_schreier(self.X, z)
        self._powers = {}
        self._taylor = {}

    @classmethod
    def trivial(cls, order, m=1):
        zero = FieldElem.const(0, m)
        return cls([zero] * order, m=m)

    @property
    def order(self):
        return len(self.xi)

    @property
    def zc(self):
        """z_1..z_N."""
        return self.Z.c[1:]

    def truncated(self, n):
        """The same derivation known only through xi_n."""
        return HDData(self.xi[:n], self.choices, strict=False, m=self.m)

    def change_ring(self, m):
        ring = ring_for(m)
        return HDData([v.change_ring(ring) for v in self.xi], self.choices, strict=False, m=m)

    def __eq__(self, other):
        return isinstance(other, HDData) and self.xi == other.xi and self.m == other.m

    def __hash__(self):
        return hash(self.xi)

    # -- cached pieces ---------------------------------------------------
    def x_powers(self, order, upto):
        """[X^0, ..., X^upto] truncated at ``order``."""
        pw = self._powers.get(order)
        if pw is None:
            X = self.X.truncate(order)
            pw = [X.one_like(), X]
            self._powers[order] = pw
        while len(pw) <= upto:
            pw.append(pw[-1] * pw[1])
        return pw

    def taylor(self, r, order):
        key = (r.num, r.den, order)
        v = self._taylor.get(key)
        if v is None:
            v = TPS(r.taylor(order))
            if len(self._taylor) > 20000:
                self._taylor.clear()
            self._taylor[key] = v
        return v


def _eval_xpoly(hd, coeffs, powers, order):
    """sum_k theta(c_k) * P^k where powers[k] = P^k; c_k in C(t)."""
    acc = None
    for k, c in enumerate(coeffs):
        if not c.num:
            continue
        shifted = hd.taylor(c, order)
        term = _mixed_mul(shifted, powers[k])
        acc = term if acc is None else acc + term
    return acc


def _mixed_mul(s, p):
    """C(t)-series times L-series, scaling coefficientwise."""
    n = len(p)
    out = [None] * n
    sc = s.c
    pc = p.c
    for i in range(n):
        r = sc[i]
        if not r.num:
            continue
        for j in range(n - i):
            v = pc[j]
            if v.is_zero():
                continue
            term = v.scale(r)
            k = i + j
            out[k] = term if out[k] is None else out[k] + term
    zero = pc[0].zero_like()
    return TPS(zero if v is None else v for v in out)


def _theta_tower(hd, e, powers, order):
    num = _eval_xpoly(hd, e.num, powers, order)
    if len(e.den) == 1:
        return num
    den = _eval_xpoly(hd, e.den, powers, order)
    return num * den.inv()


def theta(hd, u, order=None):
    """theta(u) as a series of order ``order`` (default: the full order N)."""
    if order is None:
        order = hd.order
    if order > hd.order:
        raise OrderExceeded("order %d exceeds the known order %d" % (order, hd.order))
    a, b = u.a, u.b
    deg = max(len(a.num), len(a.den), len(b.num), len(b.den))
    powers = hd.x_powers(order, deg)
    if a.num:
        out = _theta_tower(hd, a, powers, order)
    else:
        out = TPS.constant(u.zero_like(), order)
    if b.num:
        tb = _theta_tower(hd, b, powers, order)
        out = out + tb * hd.Z.truncate(order)
    return out


def theta_coeff(hd, u, m):
    """theta^(m)(u)."""
    if m < 0 or m > hd.order:
        raise OrderExceeded("theta^(%d) needs xi up to %d, have %d" % (m, m, hd.order))
    if m == 0:
        return u
    return theta(hd, u, m)[m]


def theta_compose(hd, u, i, j):
    """theta^(i)(theta^(j)(u))."""
    return theta_coeff(hd, theta_coeff(hd, u, j), i)


def theta_t(order, m=1):
    t = FieldElem.t(m)
    one = t.one_like()
    zero = t.zero_like()
    return TPS([t, one] + [zero] * (order - 1)) if order >= 1 else TPS([t])


def theta_coeff_protected(hd_partial, u, m):
    """theta^(m)(u) for u in L^2*C(t) using only xi_k with k <= m/2.

    Writes u = alpha(t, x^2) + beta(t, x^2) z^2 and substitutes
    theta(x)^2 = x^2 + sum xi_k^2 T^2k and theta(z)^2 = z^2 + sum z_k^2 T^2k,
    neither of which involves an index above m/2.
    """
    if m == 0:
        return u
    need = m // 2
    if need > hd_partial.order:
        raise InsufficientData("theta^(%d) on L^2*C(t) needs xi_1..xi_%d" % (m, need))
    try:
        alpha, beta = u.l2ct_decompose()
    except NotInSubfield:
        raise
    X = hd_partial.X.truncate(need)
    Z = hd_partial.Z.truncate(need)
    zero = u.zero_like()
    Y = [zero] * (m + 1)
    W = [zero] * (m + 1)
    for k in range(need + 1):
        Y[2 * k] = X[k].sqr()
        W[2 * k] = Z[k].sqr()
    Y = TPS(Y)
    W = TPS(W)

    def even_eval(e):
        ny, dy = e.even_part_in_xsq()
        deg = max(len(ny), len(dy))
        powers = [Y.one_like(), Y]
        while len(powers) < deg:
            powers.append(powers[-1] * Y)
        num = _eval_xpoly(hd_partial, ny, powers, m)
        if len(dy) == 1 and dy[0].is_one():
            return num
        return num * _eval_xpoly(hd_partial, dy, powers, m).inv()

    out = even_eval(alpha) if alpha.num else TPS.constant(zero, m)
    if beta.num:
        out = out + even_eval(beta) * W
    return out[m]


# --------------------------------------------------------------------------
# serialization


def zc_digest(hd):
    payload = json.dumps([field_to_json(v) for v in hd.zc], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def hd_to_json(hd, provenance=None):
    out = {
        "version": FORMAT_VERSION,
        "curve": CURVE_TAG,
        "N": hd.order,
        "xi": [field_to_json(v) for v in hd.xi],
        "choices": [c if isinstance(c, str) else render_ratfunc(c) for c in hd.choices],
        "zc_digest": zc_digest(hd),
    }
    if provenance is not None:
        out["provenance"] = provenance
    return out


def hd_from_json(obj, strict=True):
    """Rebuild an HDData and cross-check the stored z-table digest.

    Returns (hd, digest_ok).
    """
    try:
        if obj.get("curve") != CURVE_TAG:
            raise ParseError("unsupported curve %r" % obj.get("curve"))
        xi = [field_from_json(v) for v in obj["xi"]]
        if len(xi) != obj["N"]:
            raise ParseError("N=%r but %d xi entries" % (obj["N"], len(xi)))
        choices = [render_ratfunc(parse_choice(c)) for c in obj.get("choices", [])]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError("malformed HDData JSON: %s" % exc) from exc
    hd = HDData(xi, choices, strict=strict)
    stored = obj.get("zc_digest")
    return hd, stored is None or stored == zc_digest(hd)
