"""Property suites checked at a finite truncation order.

Each suite returns a ``VerificationReport``. A failing check always carries a
counterexample payload from which ``replay`` recomputes the same comparison.
"""

from dataclasses import dataclass, field as dc_field
import itertools
import time

from .constructor import compute_f_g
from .errors import OrderExceeded, PreconditionFailed
from .field import FieldElem
from .hd import theta
from .poly import lucas_binom
from .textfmt import render_field

GENERATORS = ("t", "x", "z")


@dataclass
class Check:
    id: str
    status: str
    millis: float = 0.0
    counterexample: dict = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        out = {"id": self.id, "status": self.status, "millis": round(self.millis, 3)}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list = dc_field(default_factory=list)
    telemetry: dict = dc_field(default_factory=dict)
    notes: str = ""
    candidates: list = None

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, check_id, ok, millis=0.0, counterexample=None):
        self.checks.append(Check(check_id, "pass" if ok else "fail", millis, None if ok else counterexample))

    def to_json(self):
        out = {
            "suite": self.suite,
            "checks": [c.to_json() for c in self.checks],
            "telemetry": self.telemetry,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.candidates is not None:
            out["heuristic"] = True
            out["candidates"] = self.candidates
        return out

    def summary(self):
        bad = self.failures()
        head = "%-10s %s  (%d checks, %d failed)" % (self.suite, "PASS" if not bad else "FAIL", len(self.checks), len(bad))
        lines = [head]
        for c in bad[:5]:
            lines.append("    %s: %s" % (c.id, c.counterexample))
        if self.candidates is not None:
            lines.append("    heuristic candidates: %s" % (", ".join(self.candidates) or "none"))
        return "\n".join(lines)


def hd_telemetry(hd):
    max_num = max_den = max_x = 0
    for v in tuple(hd.xi) + tuple(hd.zc):
        xd, tn, td = v.degrees()
        max_num = max(max_num, tn)
        max_den = max(max_den, td)
        max_x = max(max_x, xd)
    return {"max_num_degree": max_num, "max_den_degree": max_den, "max_x_degree": max_x}


class Derivatives:
    """Memoized theta-series of elements, shared by the checks of one suite."""

    def __init__(self, hd):
        self.hd = hd
        self._series = {}

    def series(self, u, order):
        key = u
        hit = self._series.get(key)
        if hit is not None and hit.order >= order:
            return hit
        s = theta(self.hd, u, order)
        self._series[key] = s
        return s

    def coeff(self, u, k):
        if k == 0:
            return u
        if k > self.hd.order:
            raise OrderExceeded("theta^(%d) beyond order %d" % (k, self.hd.order))
        return self.series(u, k)[k]

    def gen_coeff(self, name, k):
        """theta^(k) of a generator, read straight from the tables."""
        hd = self.hd
        if name == "t":
            t = FieldElem.t(hd.m)
            if k == 0:
                return t
            return t.one_like() if k == 1 else t.zero_like()
        if k == 0:
            return FieldElem.x(hd.m) if name == "x" else FieldElem.z(hd.m)
        return hd.X[k] if name == "x" else hd.Z[k]


def _gen_elem(name, m):
    return {"t": FieldElem.t, "x": FieldElem.x, "z": FieldElem.z}[name](m)


def check_iteration_rule(hd, order=None, generators=GENERATORS, _deriv=None):
    """theta^(i) theta^(j) (u) = C(i+j, i) theta^(i+j)(u) for i, j >= 1, i+j <= N."""
    N = hd.order if order is None else order
    if N > hd.order:
        raise OrderExceeded("order %d beyond the table (%d)" % (N, hd.order))
    rep = VerificationReport("iteration", telemetry=hd_telemetry(hd))
    dv = _deriv or Derivatives(hd)
    for u in generators:
        for j in range(1, N):
            t0 = time.perf_counter()
            inner = dv.gen_coeff(u, j)
            s = dv.series(inner, N - j) if not inner.is_zero() else None
            per = (time.perf_counter() - t0) * 1000.0 / (N - j)
            for i in range(1, N - j + 1):
                actual = s[i] if s is not None else inner
                expected = dv.gen_coeff(u, i + j) if lucas_binom(i, j) else inner.zero_like()
                ok = actual == expected
                rep.add(
                    "iteration:%s:i=%d,j=%d" % (u, i, j),
                    ok,
                    per,
                    {
                        "suite": "iteration",
                        "u": u,
                        "i": i,
                        "j": j,
                        "element": u,
                        "expected": render_field(expected),
                        "actual": render_field(actual),
                    },
                )
    return rep


def random_element(rng, m=1, t_deg=3, x_deg=2):
    """A random (a + b*z)/d with a, b in C[t, x] and d in C[t].

    Denominators stay in t: an x-denominator makes every theta-coefficient a
    fraction in x whose reduction dominates the cost without testing anything
    new, since theta is a field map once it is right on the generators.
    """
    t, x, z = FieldElem.t(m), FieldElem.x(m), FieldElem.z(m)

    def poly(xd):
        acc = t.zero_like()
        for i in range(t_deg + 1):
            for j in range(xd + 1):
                if rng.random() < 0.4:
                    acc = acc + FieldElem.const(rng.randrange(1, 1 << m), m) * t ** i * x ** j
        return acc

    num = poly(x_deg) + poly(x_deg) * z
    den = poly(0)
    if den.is_zero():
        den = den.one_like()
    return num / den


def spot_check_elements(hd, count=10, seed=0, order=None):
    """The iteration rule on ``count`` random elements at order N/2."""
    import random

    M = (hd.order if order is None else order) // 2
    rng = random.Random(seed)
    rep = VerificationReport("spot", telemetry=hd_telemetry(hd))
    dv = Derivatives(hd)
    for n in range(count):
        u = random_element(rng, hd.m)
        t0 = time.perf_counter()
        s = dv.series(u, M)
        for j in range(1, M):
            inner = s[j]
            si = dv.series(inner, M - j) if not inner.is_zero() else None
            for i in range(1, M - j + 1):
                actual = si[i] if si is not None else inner
                expected = s[i + j] if lucas_binom(i, j) else inner.zero_like()
                rep.add(
                    "spot:%d:i=%d,j=%d" % (n, i, j),
                    actual == expected,
                    (time.perf_counter() - t0) * 1000.0,
                    {"suite": "spot", "seed": seed, "sample": n, "i": i, "j": j, "element": render_field(u), "expected": render_field(expected), "actual": render_field(actual)},
                )
                t0 = time.perf_counter()
    return rep


def check_difference_derivatives(hd, order=None):
    """theta^(m)(f_j) in C(t) for m + j <= N, computed through the full engine."""
    N = hd.order if order is None else order
    rep = VerificationReport("rho-derivatives", telemetry=hd_telemetry(hd))
    ds = compute_f_g(hd, N)
    for j in range(1, N):
        t0 = time.perf_counter()
        s = theta(hd, ds.f[j], N - j)
        per = (time.perf_counter() - t0) * 1000.0 / (N - j)
        for m in range(1, N - j + 1):
            v = s[m]
            rep.add(
                "rho:theta%d(f_%d)" % (m, j),
                v.is_in_Ct(),
                per,
                {"suite": "rho-derivatives", "m": m, "j": j, "element": render_field(ds.f[j]), "expected": "element of C(t)", "actual": render_field(v)},
            )
    return rep


def check_rho_commutes(hd, order=None):
    """f_k, g_k in C(t) for all k <= N, and f^3 = g^2 + g."""
    N = hd.order if order is None else order
    rep = VerificationReport("rho", telemetry=hd_telemetry(hd))
    t0 = time.perf_counter()
    ds = compute_f_g(hd, N)
    per = (time.perf_counter() - t0) * 1000.0 / (2 * N + 3)
    rep.add("rho:curve", ds.f * ds.f * ds.f == ds.g.sqr() + ds.g, per, {"suite": "rho", "coord": "curve"})
    rep.add("rho:f_0", ds.f[0].is_zero(), per, {"suite": "rho", "coord": "f", "k": 0, "actual": render_field(ds.f[0]), "expected": "0"})
    for k in range(1, N + 1):
        for name, s in (("f", ds.f), ("g", ds.g)):
            v = s[k]
            rep.add(
                "rho:%s_%d" % (name, k),
                v.is_in_Ct(),
                per,
                {"suite": "rho", "coord": name, "k": k, "element": render_field(v), "expected": "element of C(t)", "actual": render_field(v)},
            )
    return rep


def check_thm51_conditions(hd, max_level, _deriv=None):
    """Conditions (a), (b), (c) on t, x, z for every level l <= max_level, p = 2."""
    if (2 << max_level) > hd.order:
        raise OrderExceeded("level %d needs order %d, have %d" % (max_level, 2 << max_level, hd.order))
    rep = VerificationReport("thm51", telemetry=hd_telemetry(hd))
    dv = _deriv or Derivatives(hd)

    def th(k, v):
        return dv.coeff(v, k)

    def payload(kind, u, level, extra, expected, actual):
        out = {"suite": "thm51", "kind": kind, "u": u, "level": level, "element": u}
        out.update(extra)
        out["expected"] = render_field(expected)
        out["actual"] = render_field(actual)
        return out

    for level in range(max_level + 1):
        P = 1 << level
        for u in GENERATORS:
            t0 = time.perf_counter()
            top = dv.gen_coeff(u, P)
            for m in range(P):
                lhs = dv.gen_coeff(u, m + P)
                rhs = th(P, dv.gen_coeff(u, m))
                rep.add("thm51:a:%s:l=%d,m=%d" % (u, level, m), lhs == rhs, 0.0, payload("a", u, level, {"m": m}, lhs, rhs))
            bb = th(P, top)
            rep.add("thm51:b:%s:l=%d" % (u, level), bb.is_zero(), 0.0, payload("b", u, level, {}, bb.zero_like(), bb))
            for j in range(level):
                Q = 1 << j
                left = th(Q, top)
                right = th(P, dv.gen_coeff(u, Q))
                rep.add("thm51:c:%s:l=%d,j=%d" % (u, level, j), left == right, 0.0, payload("c", u, level, {"j": j}, right, left))
            rep.checks[-1].millis = (time.perf_counter() - t0) * 1000.0
    return rep


def check_kernel_identity(hd, level, u, name=None):
    """theta^(2^j)(sum_{m<2^l} theta^(m)(u) t^m) = 0 for j < l."""
    P = 1 << level
    need = P + (P >> 1)
    if level > 0 and need > hd.order:
        raise PreconditionFailed("kernel identity at level %d needs order %d" % (level, need))
    if level > 0:
        pre = check_iteration_rule(hd, order=P - 1) if P > 2 else None
        if pre is not None and not pre.passed:
            raise PreconditionFailed("iteration rule fails below %d: %s" % (P, pre.failures()[0].id))
    label = name or render_field(u)
    rep = VerificationReport("kernel", telemetry=hd_telemetry(hd))
    if level == 0:
        return rep
    dv = Derivatives(hd)
    t0 = time.perf_counter()
    s_u = dv.series(u, P - 1)
    t = FieldElem.t(hd.m)
    acc = u.zero_like()
    tp = t.one_like()
    for m in range(P):
        acc = acc + s_u[m] * tp
        tp = tp * t
    base = (time.perf_counter() - t0) * 1000.0
    for j in range(level):
        t1 = time.perf_counter()
        v = dv.coeff(acc, 1 << j)
        rep.add(
            "kernel:%s:l=%d,j=%d" % (label, level, j),
            v.is_zero(),
            base + (time.perf_counter() - t1) * 1000.0,
            {"suite": "kernel", "level": level, "j": j, "element": render_field(u), "expected": "0", "actual": render_field(v)},
        )
    return rep


def monomial_family(degree, m=1):
    """t^a x^b z^c with c in {0, 1}, 0 < a+b+c <= degree."""
    t, x, z = FieldElem.t(m), FieldElem.x(m), FieldElem.z(m)
    out = []
    for total in range(1, degree + 1):
        for c in (0, 1):
            for b in range(total - c + 1):
                a = total - c - b
                e = t ** a * x ** b * (z if c else t.one_like())
                name = "*".join(p for p in (
                    "" if a == 0 else "t" if a == 1 else "t^%d" % a,
                    "" if b == 0 else "x" if b == 1 else "x^%d" % b,
                    "z" if c else "",
                ) if p)
                out.append((name, e))
    return out


def bounded_constant_search(hd, degree, order=None):
    """Elements of a fixed finite family killed by theta^(i), 0 < i <= N.

    The family is every monomial t^a x^b z^c (c <= 1) of total degree
    1..degree, plus 1, and all sums of two distinct members. The constant 1
    itself is excluded. An empty result is evidence, not proof, that the
    constants are exactly C.
    """
    N = hd.order if order is None else order
    dv = Derivatives(hd)
    fam = [("1", FieldElem.const(1, hd.m))] + monomial_family(degree, hd.m)
    series = {name: (e, dv.series(e, N)) for name, e in fam}
    found = []
    for name, (e, s) in series.items():
        if name != "1" and all(s[i].is_zero() for i in range(1, N + 1)):
            found.append((name, e))
    for (n1, (e1, s1)), (n2, (e2, s2)) in itertools.combinations(series.items(), 2):
        if all((s1[i] + s2[i]).is_zero() for i in range(1, N + 1)):
            found.append(("%s+%s" % (n1, n2), e1 + e2))
    return found


def constants_report(hd, degree=3, order=None):
    N = hd.order if order is None else order
    t0 = time.perf_counter()
    found = bounded_constant_search(hd, degree, N)
    names = [name for name, _ in found]
    rep = VerificationReport(
        "constants",
        telemetry=hd_telemetry(hd),
        notes="heuristic: bounded search over monomials of degree <= %d and their pairwise sums; "
        "absence is not a proof. Candidates outside C found: %s" % (degree, ", ".join(names) if names else "none"),
    )
    # informational: a derivation with more constants (e.g. the trivial one) is still a derivation
    rep.add("constants:d=%d,N=%d" % (degree, N), True, (time.perf_counter() - t0) * 1000.0)
    rep.candidates = names
    return rep


def replay(hd, counterexample):
    """Recompute a single failed comparison; True iff it still fails."""
    suite = counterexample.get("suite")
    if suite == "iteration":
        u, i, j = counterexample["u"], counterexample["i"], counterexample["j"]
        dv = Derivatives(hd)
        inner = dv.gen_coeff(u, j)
        actual = dv.coeff(inner, i)
        expected = dv.gen_coeff(u, i + j) if lucas_binom(i, j) else inner.zero_like()
        return actual != expected
    if suite == "rho":
        if counterexample["coord"] == "curve":
            ds = compute_f_g(hd)
            return ds.f * ds.f * ds.f != ds.g.sqr() + ds.g
        k = counterexample["k"]
        ds = compute_f_g(hd, max(k, 1))
        v = (ds.f if counterexample["coord"] == "f" else ds.g)[k]
        return not v.is_zero() if k == 0 else not v.is_in_Ct()
    if suite == "thm51":
        dv = Derivatives(hd)
        u, level = counterexample["u"], counterexample["level"]
        P = 1 << level
        kind = counterexample["kind"]
        if kind == "a":
            m = counterexample["m"]
            return dv.gen_coeff(u, m + P) != dv.coeff(dv.gen_coeff(u, m), P)
        if kind == "b":
            return not dv.coeff(dv.gen_coeff(u, P), P).is_zero()
        j = counterexample["j"]
        Q = 1 << j
        return dv.coeff(dv.gen_coeff(u, P), Q) != dv.coeff(dv.gen_coeff(u, Q), P)
    raise ValueError("cannot replay suite %r" % suite)
