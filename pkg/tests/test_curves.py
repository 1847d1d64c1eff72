import pytest

from milnorsig.corpus import B, C_, F4, H, S, corank2, cross_cap
from milnorsig.curves import (associate, classify_twist, component_set,
                              curve_milnor, decompose, intersection_table,
                              v_axis_multiplicities)
from milnorsig.germs import AnalysisError, UV, double_curve_equation
from milnorsig.parser import parse_poly


def test_decompose_examples():
    f = S(1)
    comps = decompose(double_curve_equation(f))
    assert len(comps) == 2
    assert {str(c) for c in comps} == {"u - i*v", "u + i*v"}
    f = B(4)
    comps = decompose(double_curve_equation(f))
    assert {str(c) for c in comps} == {"u - i*v^4", "u + i*v^4"}
    f = F4()
    comps = decompose(double_curve_equation(f))
    assert len(comps) == 1


def test_decompose_override_validation():
    f = S(1)
    curve = double_curve_equation(f)
    good = [parse_poly("u - i*v", UV, f.field), parse_poly("u + i*v", UV, f.field)]
    assert len(decompose(curve, good)) == 2
    with pytest.raises(AnalysisError):
        decompose(curve, [parse_poly("u - i*v", UV, f.field)])
    with pytest.raises(AnalysisError):
        decompose(curve, [good[0], parse_poly("2*u - 2*i*v", UV, f.field)])


def test_twist_fold_path():
    f = S(1)
    comps = decompose(double_curve_equation(f))
    pairing = classify_twist(f, comps)
    assert pairing == [("untwisted", 0, 1)]
    f = B(4)
    comps = decompose(double_curve_equation(f))
    assert classify_twist(f, comps) == [("twisted", 0), ("twisted", 1)]
    f = C_(5)
    comps = decompose(double_curve_equation(f))
    pairing = classify_twist(f, comps)
    kinds = sorted(p[0] for p in pairing)
    assert kinds == ["twisted", "untwisted"]
    # the twisted one is the u-axis component
    twisted = next(p for p in pairing if p[0] == "twisted")
    assert str(comps[twisted[1]]) == "u"


def test_twist_general_path_matches_fold_path():
    for f in (cross_cap(), S(1), S(2), B(2), B(4), C_(3), C_(4), F4()):
        comps = decompose(double_curve_equation(f))
        fold_pairing = classify_twist(f, comps)
        # exercise the divided-difference partner route directly
        from milnorsig.curves import _general_partner
        from milnorsig.germs import multipoint_data
        from milnorsig.poly import LOCAL_ORDER
        mp = multipoint_data(f)
        comps_v2 = [h.rename({"v": "v2"}, ("u", "v1", "v2")).normalized(LOCAL_ORDER)
                    for h in comps]
        for entry in fold_pairing:
            if entry[0] == "twisted":
                i = entry[1]
                assert _general_partner(comps[i], mp, comps_v2) == [i], f.name
            else:
                i, j = entry[1], entry[2]
                assert _general_partner(comps[i], mp, comps_v2) == [j], f.name
                assert _general_partner(comps[j], mp, comps_v2) == [i], f.name


def test_twist_general_path_Hk():
    f = H(2)
    comps = decompose(double_curve_equation(f))
    pairing = classify_twist(f, comps)
    assert pairing == [("untwisted", 0, 1)]


def test_twist_override_validation():
    f = corank2()
    comps = decompose(double_curve_equation(f), f.overrides.components)
    pairing = classify_twist(f, comps, f.overrides.twist)
    assert all(p[0] == "twisted" for p in pairing) and len(pairing) == 5
    with pytest.raises(AnalysisError):
        classify_twist(f, comps, [("twisted", 0)])
    with pytest.raises(AnalysisError):
        classify_twist(f, comps, [("twisted", i) for i in (0, 1, 2, 3)]
                       + [("untwisted", 4, 4)])


def test_pairing_is_involution():
    for f in (S(1), C_(5), H(2)):
        curve = double_curve_equation(f)
        cs = component_set(f, curve)
        for i in range(len(cs.components)):
            assert cs.partner(cs.partner(i)) == i


def test_intersection_tables():
    f = S(1)
    comps = decompose(double_curve_equation(f))
    assert intersection_table(comps) == [[0, 1], [1, 0]]
    f = H(2)
    comps = decompose(double_curve_equation(f))
    assert intersection_table(comps) == [[0, 4], [4, 0]]
    f = corank2()
    comps = decompose(double_curve_equation(f), f.overrides.components)
    table = intersection_table(comps)
    n = len(comps)
    assert all(table[i][j] == 1 for i in range(n) for j in range(n) if i != j)


def test_repeated_component_detected():
    f = S(1)
    h = parse_poly("u - i*v", UV, f.field)
    with pytest.raises(AnalysisError):
        intersection_table([h, h * parse_poly("u + i*v", UV, f.field)])


def test_v_axis_multiplicities():
    f = C_(5)
    comps = decompose(double_curve_equation(f))
    vax = v_axis_multiplicities(comps)
    # u-axis component meets {v=0} once; u^2 +- i*v components meet it twice
    assert sorted(vax) == [1, 2, 2]


def test_curve_milnor():
    f = S(1)
    assert curve_milnor(double_curve_equation(f)) == 1
    f = H(2)
    assert curve_milnor(double_curve_equation(f)) == 7
    f = S(2)
    assert curve_milnor(double_curve_equation(f)) == 2


def test_associate():
    a = parse_poly("u + v", UV, S(1).field)
    assert associate(a, a.scale(3))
    assert not associate(a, parse_poly("u - v", UV, S(1).field))
