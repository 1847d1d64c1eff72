import pytest

from milnorsig.arith import try_divide
from milnorsig.factor import FactorizationIncomplete, factor_components
from milnorsig.fields import QQ, parse_field
from milnorsig.parser import parse_poly
from milnorsig.poly import LOCAL_ORDER, Poly

UV = ("u", "v")
Qi = parse_field("Q(i)")
Qz = parse_field("Q(zeta3)")


def check_multiplies_back(a, factors):
    prod = Poly.constant(1, a.vars, a.field)
    for f, m in factors:
        prod = prod * f ** m
    assert prod.normalized(LOCAL_ORDER) == a.normalized(LOCAL_ORDER)


def test_conjugate_pair_over_Qi():
    a = parse_poly("u^2 + v^2", UV, Qi)
    factors = factor_components(a)
    assert len(factors) == 2 and all(m == 1 for _, m in factors)
    eqs = {str(f) for f, _ in factors}
    assert eqs == {"u - i*v", "u + i*v"}
    check_multiplies_back(a, factors)


def test_Ck_pattern():
    a = parse_poly("u*v^2 + u^3", UV, Qi)
    factors = factor_components(a)
    assert len(factors) == 3 and all(m == 1 for _, m in factors)
    check_multiplies_back(a, factors)
    assert any(f == Poly.variable("u", UV, Qi) for f, _ in factors)


def test_F4_irreducible():
    a = parse_poly("u^3 + v^4", UV, QQ)
    factors = factor_components(a)
    assert len(factors) == 1 and factors[0][1] == 1


def test_Hk_curve_over_zeta3():
    a = parse_poly("u^2 + u*v^4 + v^8", UV, Qz)
    factors = factor_components(a)
    assert len(factors) == 2
    check_multiplies_back(a, factors)
    for f, _ in factors:
        assert f.degree_in("u") == 1 and f.degree_in("v") == 4


def test_multiplicities():
    a = parse_poly("v^2*(u + v)", UV, QQ)
    factors = factor_components(a)
    assert sorted(m for _, m in factors) == [1, 2]
    check_multiplies_back(a, factors)


def test_even_case_certificate():
    # v^2 + u^(k+1) for even k: coprime Newton endpoints, certified irreducible
    for k in (2, 4):
        a = parse_poly(f"v^2 + u^{k + 1}", UV, QQ)
        factors = factor_components(a)
        assert len(factors) == 1 and factors[0][1] == 1


def test_incomplete_factorization_raises():
    # (v^2+u^3+u^2)*(v^2-u^3-u^2) has a two-edge Newton polygon and quadratic
    # v-degree roots outside the strategy: must refuse, not guess
    a = parse_poly("(v^2 + u^3 + u^2)*(v^2 + u^5 + 2*u^2)", UV, QQ)
    with pytest.raises(FactorizationIncomplete):
        factor_components(a)


def test_no_silent_reducible_factor():
    # u^2 - v^2 over Q splits; must not be returned as one factor
    a = parse_poly("u^2 - v^2", UV, QQ)
    factors = factor_components(a)
    assert len(factors) == 2
    check_multiplies_back(a, factors)
    for f, _ in factors:
        assert try_divide(a, f) is not None
