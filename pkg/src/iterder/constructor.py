"""Recursive construction of iterative derivations on L commuting with rho.

Block l fixes xi_(2^l) as

    sum_{0<m<2^l} theta^(2^l)(xi_m) t^m
      + (sum_{0<=m<2^l} theta^(m)(ftilde_(2^l)) t^m)^2
      + c_l(t^(2^(l+1)))

and then sets xi_(m+2^l) = theta^(2^l)(xi_m) for 0 < m < 2^l. The free term
c_l is the only choice; everything else is forced.
"""

from dataclasses import dataclass, field as dc_field

from .ecgroup import AffinePoint, SeriesOps, sub_lemma61
from .errors import ChoiceNotInSubfield, InsufficientData, MembershipViolation, NotInSubfield
from .field import FieldElem
from .hd import HDData, theta, theta_coeff_protected
from .poly import ring_for
from .series import TPS
from .textfmt import parse_choice, render_ratfunc
from .tower import RatFunc, TowerElem


@dataclass(frozen=True)
class DifferenceSeries:
    """eta (-) theta_*(eta) = (f(T), g(T))."""

    f: TPS
    g: TPS


@dataclass
class ChoiceSpec:
    """Free terms c_l as rational functions in ``s``; missing blocks are 0.

    An entry written in ``t`` is used as is and must already lie in
    C(t^(2^(l+1))).
    """

    entries: list = dc_field(default_factory=list)

    @classmethod
    def parse(cls, strings):
        return cls([parse_choice(str(s)) for s in strings])

    @classmethod
    def sample(cls):
        return cls.parse(["s"])

    def get(self, level):
        if level < len(self.entries):
            return self.entries[level]
        return RatFunc.const(ring_for(1), 0, "s")

    def to_json(self):
        return [render_ratfunc(c) for c in self.entries]


def compute_f_g(hd, order=None):
    """Coordinates of eta (-) theta_*(eta) through the difference formula."""
    order = hd.order if order is None else order
    X = hd.X.truncate(order)
    Z = hd.Z.truncate(order)
    ops = SeriesOps(X.one_like())
    eta = AffinePoint(TPS.constant(X[0], order), TPS.constant(Z[0], order), check=False)
    D = sub_lemma61(eta, AffinePoint(X, Z, check=False), ops)
    f, g = D.x, D.z
    if not f[0].is_zero():
        raise AssertionError("f_0 = %s, expected 0" % f[0])
    if f * f * f != g.sqr() + g:
        raise AssertionError("difference point is off the curve")
    return DifferenceSeries(f, g)


def q_series(hd, order):
    """(theta(z) - z/(1+z)) / (theta(x) - x/(1+z)) to the given order."""
    X = hd.X.truncate(order)
    Z = hd.Z.truncate(order)
    x, z = X[0], Z[0]
    d = (z + 1).inv()
    return (Z + TPS.constant(z * d, order)) * (X + TPS.constant(x * d, order)).inv()


def ftilde(hd_partial, level):
    """ftilde_(2^l) = [T^(2^(l-1))] Q(T); zero for l = 0."""
    if level == 0:
        return FieldElem.const(0, hd_partial.m)
    k = 1 << (level - 1)
    if hd_partial.order < k:
        raise InsufficientData("ftilde_%d needs xi_1..xi_%d" % (1 << level, k))
    return q_series(hd_partial, k)[k]


def in_power_subfield(r, k):
    """True iff the C(t)-element r lies in C(t^(2^k)), by repeated parity tests."""
    ring = r.ring
    for _ in range(k):
        if not r.is_square_field_member():
            return False
        # reduced and even: numerator and denominator are polynomials in t^2
        r = RatFunc._raw(ring, _deflate2(ring, r.num), _deflate2(ring, r.den), r.var)
    return True


def _deflate2(ring, p):
    return ring.from_coeffs(ring.coeffs(p)[::2])


def choice_element(c, level, m=1):
    """Turn a free term into the field element added to xi_(2^l).

    A function of ``s`` is substituted at s = t^(2^(l+1)); a function of ``t``
    is taken as given and must already lie in C(t^(2^(l+1))).
    """
    e = 1 << (level + 1)
    if c.var == "s":
        r = c.inflate(e, var="t")
    else:
        r = c
    if not in_power_subfield(r, level + 1):
        raise ChoiceNotInSubfield("%s is not in C(t^%d)" % (render_ratfunc(r), e))
    ring = ring_for(m)
    return FieldElem(TowerElem.from_ratfunc(r.change_ring(ring)))


def block_terms(hd_partial, level):
    """(canonical xi_(2^l), [theta^(2^l)(xi_m) for 0 < m < 2^l])."""
    n = 1 << level
    if hd_partial.order < n - 1:
        raise InsufficientData("block %d needs xi_1..xi_%d" % (level, n - 1))
    m_ = hd_partial.m
    t = FieldElem.t(m_)
    prop = [theta_coeff_protected(hd_partial, hd_partial.xi[k - 1], n) for k in range(1, n)]
    total = FieldElem.const(0, m_)
    tp = t
    for v in prop:
        total = total + v * tp
        tp = tp * t
    ft = ftilde(hd_partial, level)
    if not ft.is_zero():
        series = theta(hd_partial, ft, n - 1) if n > 1 else TPS([ft])
        inner = FieldElem.const(0, m_)
        tp = t.one_like()
        for k in range(n):
            inner = inner + series[k] * tp
            tp = tp * t
        total = total + inner.sqr()
    return total, prop


def extend_block(hd_partial, level, choice):
    """Return the xi-table extended through index 2^(l+1) - 1."""
    n = 1 << level
    if hd_partial.order != n - 1:
        raise InsufficientData("block %d expects exactly xi_1..xi_%d, got %d" % (level, n - 1, hd_partial.order))
    canonical, prop = block_terms(hd_partial, level)
    xi_n = canonical + choice_element(choice, level, hd_partial.m)
    if not xi_n.is_in_L2Ct():
        raise MembershipViolation("xi_%d = %s left L^2*C(t)" % (n, xi_n))
    table = list(hd_partial.xi) + [xi_n] + prop
    for k, v in enumerate(prop, n + 1):
        if not v.is_in_L2Ct():
            raise MembershipViolation("xi_%d = %s left L^2*C(t)" % (k, v))
    return table


def construct(order, choices=None, m=1):
    """Build xi_1..xi_N block by block."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if choices is None:
        choices = ChoiceSpec()
    elif not isinstance(choices, ChoiceSpec):
        choices = ChoiceSpec(list(choices))
    hd = HDData([], m=m)
    used = []
    level = 0
    while (1 << level) <= order:
        c = choices.get(level)
        used.append(render_ratfunc(c))
        table = extend_block(hd, level, c)
        hd = HDData(table, strict=False, m=m)
        level += 1
    return HDData(hd.xi[:order], used, strict=True, m=m)


def check_thm51_choice_set(hd_partial, level, candidate):
    """Whether ``candidate`` is an admissible xi_(2^l) in the general recipe.

    The difference d = candidate + sum theta^(2^l)(xi_m) t^m must lie in L^2*C(t)
    and be killed by theta^(2^j) for every j <= l.
    """
    n = 1 << level
    if hd_partial.order < n - 1:
        raise InsufficientData("need xi_1..xi_%d" % (n - 1))
    if not candidate.is_in_L2Ct():
        return False
    hd = hd_partial.truncated(n - 1) if hd_partial.order > n - 1 else hd_partial
    t = FieldElem.t(hd.m)
    d = candidate
    tp = t
    for k in range(1, n):
        d = d + theta_coeff_protected(hd, hd.xi[k - 1], n) * tp
        tp = tp * t
    try:
        for j in range(level + 1):
            if not theta_coeff_protected(hd, d, 1 << j).is_zero():
                return False
    except NotInSubfield:
        return False
    return True
