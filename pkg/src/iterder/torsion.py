"""Translation by rational torsion points, as automorphisms of L over GF(4).

For a GF(4)-point tau, sigma_tau sends the generic point (x, z) to
(x, z) (+) tau in the translated law. With constants extended to GF(4) this is
a field automorphism of L fixing t; the check here is that it commutes with a
higher derivation theta extended trivially to the new constants.
"""

import time

from .ecgroup import FieldOps, GFOps, INFINITY, AffinePoint, mul_n, neutral, points_over, translated_op
from .field import FieldElem
from .gf2m import get_field
from .hd import theta
from .textfmt import render_field
from .verifier import VerificationReport, hd_telemetry

GF4 = get_field(2)


class TorsionPoint:
    """A GF(4)-point of the curve, checked to be 3-torsion."""

    __slots__ = ("point",)

    def __init__(self, point):
        ops = GFOps(GF4)
        if point is not INFINITY and point.x * point.x * point.x != point.z * point.z + point.z:
            raise ValueError("%r is not on the curve" % (point,))
        if mul_n(point, 3, ops) != neutral(ops):
            raise ValueError("%r is not 3-torsion" % (point,))
        self.point = point

    @property
    def is_neutral(self):
        p = self.point
        return p is not INFINITY and p.x.is_zero() and p.z.is_zero()

    def __eq__(self, other):
        return isinstance(other, TorsionPoint) and self.point == other.point

    def __hash__(self):
        return hash(self.point)

    def __repr__(self):
        if self.point is INFINITY:
            return "TorsionPoint(infinity)"
        return "TorsionPoint(%s, %s)" % (self.point.x, self.point.z)

    def label(self):
        if self.point is INFINITY:
            return "infinity"
        return "(%s,%s)" % (self.point.x, self.point.z)


def enumerate_3_torsion():
    return [TorsionPoint(P) for P in points_over(GF4)]


def torsion_add(a, b):
    return TorsionPoint(translated_op(a.point, b.point, "add", GFOps(GF4)))


def _lift(P):
    """The GF(4)-point as constants of L over GF(4)."""
    if P is INFINITY:
        return INFINITY
    return AffinePoint(FieldElem.const(P.x.v, 2), FieldElem.const(P.z.v, 2), check=False)


def translate_generators(tau):
    """(sigma_tau(x), sigma_tau(z)): the coordinates of (x, z) (+) tau."""
    x, z = FieldElem.x(2), FieldElem.z(2)
    if tau.is_neutral:
        return x, z
    ops = FieldOps(x.one_like(), "L over GF(4)")
    R = translated_op(AffinePoint(x, z, check=False), _lift(tau.point), "add", ops)
    return R.x, R.z


def _eval_xpoly(coeffs, sx):
    acc = sx.zero_like()
    for c in reversed(coeffs):
        acc = acc * sx
        if c.num:
            acc = acc + FieldElem(c)
    return acc


def _eval_tower(e, sx):
    num = _eval_xpoly(e.num, sx)
    if len(e.den) == 1 and e.den[0].is_one():
        return num
    return num / _eval_xpoly(e.den, sx)


def apply_sigma(u, images):
    """Substitute x -> images[0], z -> images[1] in u; t is fixed."""
    sx, sz = images
    if u.ring != sx.ring:
        u = u.change_ring(sx.ring)
    out = _eval_tower(u.a, sx) if u.a.num else sx.zero_like()
    if u.b.num:
        out = out + _eval_tower(u.b, sx) * sz
    return out


def check_id_automorphism(hd, tau, order=None):
    """sigma_tau(theta^(i)(u)) = theta^(i)(sigma_tau(u)) for u in {x, z}, i <= N."""
    N = hd.order if order is None else order
    rep = VerificationReport("torsion", telemetry=hd_telemetry(hd))
    hd4 = hd.change_ring(2) if hd.m != 2 else hd
    if N < hd4.order:
        hd4 = hd4.truncated(N)
    images = translate_generators(tau)
    for name, gen_series, img in (("x", hd4.X, images[0]), ("z", hd4.Z, images[1])):
        t0 = time.perf_counter()
        rhs = theta(hd4, img, N)
        per = (time.perf_counter() - t0) * 1000.0 / (N + 1)
        for i in range(N + 1):
            t1 = time.perf_counter()
            lhs = apply_sigma(gen_series[i], images)
            ok = lhs == rhs[i]
            rep.add(
                "torsion:%s:%s:i=%d" % (tau.label(), name, i),
                ok,
                per + (time.perf_counter() - t1) * 1000.0,
                {
                    "suite": "torsion",
                    "tau": tau.label(),
                    "u": name,
                    "i": i,
                    "element": name,
                    "expected": render_field(rhs[i]),
                    "actual": render_field(lhs),
                },
            )
    return rep


def check_all_torsion(hd, order=None):
    rep = VerificationReport("torsion", telemetry=hd_telemetry(hd))
    for tau in enumerate_3_torsion():
        rep.checks.extend(check_id_automorphism(hd, tau, order).checks)
    return rep


def check_action_composition():
    """sigma_tau(sigma_tau'(gens)) = sigma_(tau (+) tau')(gens) for all 81 pairs."""
    rep = VerificationReport("torsion-action")
    pts = enumerate_3_torsion()
    images = {tau: translate_generators(tau) for tau in pts}
    for a in pts:
        for b in pts:
            t0 = time.perf_counter()
            inner = images[b]
            composed = (apply_sigma(inner[0], images[a]), apply_sigma(inner[1], images[a]))
            expected = images[torsion_add(a, b)]
            rep.add(
                "action:%s*%s" % (a.label(), b.label()),
                composed == expected,
                (time.perf_counter() - t0) * 1000.0,
                {"suite": "torsion-action", "tau": a.label(), "tau2": b.label(), "expected": [render_field(v) for v in expected], "actual": [render_field(v) for v in composed]},
            )
    return rep


def no_rational_2_torsion(k_max=8):
    """[2]P = neutral only for P = neutral, over GF(2^k) for 1 <= k <= k_max."""
    if k_max > 8:
        raise ValueError("k_max must be <= 8")
    rep = VerificationReport("two-torsion")
    for k in range(1, k_max + 1):
        t0 = time.perf_counter()
        ops = GFOps(get_field(k))
        O = neutral(ops)
        bad = [P for P in points_over(ops.field) if mul_n(P, 2, ops) == O and P != O]
        rep.add(
            "two-torsion:k=%d" % k,
            not bad,
            (time.perf_counter() - t0) * 1000.0,
            {"suite": "two-torsion", "k": k, "points": [repr(P) for P in bad]},
        )
    return rep
