import json

import pytest

from iterder.errors import OrderExceeded, PreconditionFailed
from iterder.field import FieldElem
from iterder.hd import HDData
from iterder.verifier import (
    Derivatives,
    bounded_constant_search,
    check_difference_derivatives,
    check_iteration_rule,
    check_kernel_identity,
    check_rho_commutes,
    check_thm51_conditions,
    constants_report,
    monomial_family,
    random_element,
    replay,
    spot_check_elements,
)

from strategies import F, corpus, tampered

t, x, z = FieldElem.t(), FieldElem.x(), FieldElem.z()


def test_lawful_suites(hd8):
    assert check_iteration_rule(hd8).passed
    assert check_rho_commutes(hd8).passed
    assert check_difference_derivatives(hd8).passed
    assert check_thm51_conditions(hd8, 2).passed
    assert spot_check_elements(hd8, count=4).passed


def test_xi1_equal_t_fails_iteration():
    rep = check_iteration_rule(HDData([t, F("0")], strict=False))
    first = rep.failures()[0]
    assert first.id == "iteration:x:i=1,j=1"
    ce = first.counterexample
    assert (ce["u"], ce["i"], ce["j"]) == ("x", 1, 1)
    assert ce["expected"] == "0" and ce["actual"] == "1"


def test_xi1_equal_x_fails_rho():
    hd = HDData([x, F("0")], strict=False)
    rep = check_rho_commutes(hd)
    ids = [c.id for c in rep.failures()]
    assert "rho:f_1" in ids
    ce = next(c for c in rep.failures() if c.id == "rho:f_1").counterexample
    assert ce["actual"] == "x"
    assert replay(hd, ce)


def test_tampered_xi2_fails_at_first_affected_pair(hd8):
    bad = tampered(hd8, 2, t)
    rep = check_iteration_rule(bad)
    first = rep.failures()[0]
    assert (first.counterexample["i"], first.counterexample["j"]) == (1, 2)
    assert replay(bad, first.counterexample)
    assert not replay(hd8, first.counterexample)


def test_replay_thm51(hd8):
    bad = tampered(hd8, 3, x * x)
    rep = check_thm51_conditions(bad, 1)
    assert not rep.passed
    for c in rep.failures():
        assert replay(bad, c.counterexample)
        assert not replay(hd8, c.counterexample)


def test_iteration_and_thm51_agree_on_corpus():
    table = corpus()
    assert len(table) >= 6
    outcomes = set()
    for label, hd in table:
        for level in range(3):
            N = 2 << level
            part = hd.truncated(N)
            a = check_iteration_rule(part).passed
            b = check_thm51_conditions(part, level).passed
            assert a == b, (label, N)
            outcomes.add(a)
    assert outcomes == {True, False}


def test_order_guards(hd8):
    with pytest.raises(OrderExceeded):
        check_thm51_conditions(hd8, 3)
    with pytest.raises(OrderExceeded):
        check_iteration_rule(hd8, order=9)
    with pytest.raises(PreconditionFailed):
        check_kernel_identity(hd8, 3, t)


def test_kernel_identity(hd16):
    assert check_kernel_identity(hd16, 0, x).checks == []
    for level in range(1, 4):
        for u in (t, x, z, x * z + t):
            rep = check_kernel_identity(hd16, level, u)
            assert rep.passed and len(rep.checks) == level


def test_kernel_precondition_on_broken_table():
    hd = HDData([t] + [F("0")] * 7, strict=False)
    with pytest.raises(PreconditionFailed):
        check_kernel_identity(hd, 3, x)


def test_constants(hd8):
    assert len(monomial_family(1)) == 3
    assert bounded_constant_search(hd8, 3) == []
    names = [n for n, _ in bounded_constant_search(HDData.trivial(4), 2)]
    assert "x" in names and "z" in names and "1" not in names
    rep = constants_report(HDData.trivial(4), degree=2)
    assert rep.passed and rep.to_json()["heuristic"] is True
    assert "x" in rep.to_json()["candidates"]


def test_random_elements_have_t_denominators():
    import random

    rng = random.Random(3)
    for _ in range(10):
        u = random_element(rng)
        assert u.a.den == u.b.den or u.b.is_zero() or u.a.is_zero()
        for part in (u.a, u.b):
            assert len(part.den) == 1


def test_derivatives_memo(hd8):
    dv = Derivatives(hd8)
    s = dv.series(x * z, 8)
    assert dv.series(x * z, 4) is s
    assert dv.coeff(x, 0) == x
    assert dv.gen_coeff("t", 1).is_one() and dv.gen_coeff("t", 2).is_zero()


def test_report_json_schema():
    rep = check_iteration_rule(HDData([t, F("0")], strict=False))
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["suite"] == "iteration"
    assert set(doc["telemetry"]) == {"max_num_degree", "max_den_degree", "max_x_degree"}
    for c in doc["checks"]:
        assert set(c) <= {"id", "status", "millis", "counterexample"}
        assert c["status"] in ("pass", "fail")
        assert ("counterexample" in c) == (c["status"] == "fail")
    assert "FAIL" in rep.summary()
