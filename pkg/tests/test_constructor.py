import random

import pytest

from iterder.constructor import (
    ChoiceSpec,
    block_terms,
    check_thm51_choice_set,
    choice_element,
    compute_f_g,
    construct,
    extend_block,
    ftilde,
    in_power_subfield,
)
from iterder.errors import ChoiceNotInSubfield, InsufficientData, ParseError
from iterder.field import FieldElem
from iterder.hd import HDData, theta_coeff
from iterder.textfmt import parse_ratfunc
from iterder.verifier import check_iteration_rule, check_rho_commutes, check_thm51_conditions

from strategies import F

t, x, z = FieldElem.t(), FieldElem.x(), FieldElem.z()


def test_f_g_trivial():
    ds = compute_f_g(HDData.trivial(6))
    assert ds.f.is_zero() and ds.g.is_zero()


def test_f_g_structure(hd8):
    ds = compute_f_g(hd8)
    for m in range(1, 9, 2):
        assert ds.f[m] == hd8.xi[m - 1]
    assert ds.g[0].is_zero() and ds.g[1].is_zero() and ds.g[2].is_zero()
    assert ds.f * ds.f * ds.f == ds.g.sqr() + ds.g
    for k in range(9):
        assert ds.f[k].is_in_Ct() and ds.g[k].is_in_Ct()


def test_f_at_powers_of_two_is_xi_plus_ftilde_squared(hd8):
    ds = compute_f_g(hd8)
    for level in (1, 2, 3):
        n = 1 << level
        assert ds.f[n] == hd8.xi[n - 1] + ftilde(hd8, level).sqr()


def test_ftilde_examples():
    assert ftilde(HDData([]), 0).is_zero()
    assert ftilde(HDData([F("0")]), 1).is_zero()
    assert ftilde(HDData([F("t^2")]), 1) == F("t^2*x")
    with pytest.raises(InsufficientData):
        ftilde(HDData([F("t^2")]), 2)


def test_anchor_values_by_hand():
    # xi_2 = t*theta^(2)(xi_1) + (ftilde_2 + theta^(1)(ftilde_2) t)^2
    #      = t*1 + (t^2 x + t^4 * t)^2
    hd = construct(4, ChoiceSpec.parse(["s", "0"]))
    assert hd.xi[0] == F("t^2")
    assert hd.xi[1] == t + (F("t^2*x") + F("t^5")).sqr()
    assert hd.xi[1] == F("t+t^4*x^2+t^10")
    assert hd.xi[2].is_one()
    assert hd.xi[3].is_in_L2Ct()


def test_trivial_and_substitution():
    hd = construct(8)
    assert all(v.is_zero() for v in hd.xi)
    assert construct(1, ChoiceSpec.parse(["s^2"])).xi == (F("t^4"),)
    assert construct(3, ChoiceSpec.parse(["s", "s"])).xi[1] == F("t+t^4*x^2+t^10+t^4")


def test_choices_logged_and_deterministic():
    a = construct(8, ChoiceSpec.parse(["s+1", "1/(s+1)"]))
    b = construct(8, ChoiceSpec.parse(["s+1", "1/(s+1)"]))
    assert a == b and a.zc == b.zc
    assert a.choices == ("s+1", "(1)/(s+1)", "0", "0")


def test_propagation_rule_with_full_table(hd16):
    for level in range(4):
        n = 1 << level
        for m in range(1, n):
            assert hd16.xi[m + n - 1] == theta_coeff(hd16, hd16.xi[m - 1], n)
    assert all(v.is_in_L2Ct() for v in hd16.xi)


def test_choice_subfield_checks():
    assert in_power_subfield(parse_ratfunc("t^8+t^4"), 2)
    assert not in_power_subfield(parse_ratfunc("t^8+t^2"), 2)
    assert choice_element(parse_ratfunc("s", var="s"), 1) == F("t^4")
    with pytest.raises(ChoiceNotInSubfield):
        construct(2, ChoiceSpec.parse(["t"]))
    with pytest.raises(ChoiceNotInSubfield):
        construct(2, ChoiceSpec.parse(["t^2", "t^2"]))
    assert construct(2, ChoiceSpec.parse(["t^2", "t^4"])).xi[0] == F("t^2")
    with pytest.raises(ParseError):
        ChoiceSpec.parse(["s+"])


def test_block_preconditions(hd8):
    with pytest.raises(InsufficientData):
        extend_block(hd8, 1, parse_ratfunc("0", var="s"))
    with pytest.raises(InsufficientData):
        block_terms(HDData([F("t^2")]), 2)


def test_canonical_blocks_pass_general_choice_test(hd16):
    for level in range(4):
        n = 1 << level
        part = hd16.truncated(n - 1)
        canonical, _ = block_terms(part, level)
        assert check_thm51_choice_set(part, level, canonical)
        assert check_thm51_choice_set(part, level, hd16.xi[n - 1])
        shift = FieldElem.t() ** (1 << (level + 1))
        assert check_thm51_choice_set(part, level, canonical + shift)
    assert not check_thm51_choice_set(HDData([]), 0, t)
    part = hd16.truncated(1)
    canonical, _ = block_terms(part, 1)
    assert not check_thm51_choice_set(part, 1, canonical + t * t)
    assert not check_thm51_choice_set(part, 1, canonical + z)
    with pytest.raises(InsufficientData):
        check_thm51_choice_set(HDData([]), 2, t)


def random_choice(rng):
    terms = [k for k in range(4) if rng.random() < 0.5]
    num = "+".join("s^%d" % k for k in terms) or "0"
    if rng.random() < 0.3:
        return "(%s)/(s+1)" % num
    return num


def test_random_choice_specs_pass():
    rng = random.Random(11)
    for _ in range(5):
        spec = [random_choice(rng) for _ in range(4)]
        hd = construct(8, ChoiceSpec.parse(spec))
        assert check_iteration_rule(hd).passed, spec
        assert check_rho_commutes(hd).passed, spec
        assert check_thm51_conditions(hd, 2).passed, spec
