"""Case dispatch and closed-form values of the pigeonhole number."""

import pytest

from ordpigeon.engine import (
    CasePath,
    EmptyInstance,
    Exists,
    Independent,
    Infinite,
    Instance,
    PowerOfOmegaInput,
    RelationVerdict,
    analyze,
    case6_decompose,
    classify_case,
    minimal_omega_power_bound,
    normalize,
    p_top,
    relation_holds,
)
from ordpigeon.ordinal import (
    Cardinal,
    ONE,
    OMEGA,
    OMEGA1,
    OMEGA2,
    ZERO,
    add,
    as_exponent,
    from_int,
    initial_ordinal,
    mul,
    omega_pow,
)

w = OMEGA
w1 = OMEGA1
w2 = OMEGA2
A0 = Cardinal.aleph(0)
A1 = Cardinal.aleph(1)


def wp(e):
    return omega_pow(e)


def value(*entries):
    result = p_top(Instance.of(*entries))
    assert isinstance(result, Exists), result
    return result.value


def case_of(*entries):
    return analyze(Instance.of(*entries)).case


# -- normalisation ------------------------------------------------------------


def test_empty_instance_rejected():
    with pytest.raises(EmptyInstance):
        normalize(Instance(()))
    with pytest.raises(EmptyInstance):
        Instance.of((w, 0))


def test_degenerate_targets():
    assert p_top(Instance.of(0, w)) == Exists(ZERO)
    assert p_top(Instance.of(1, 1, 1)) == Exists(ONE)
    assert case_of(0, w1) is CasePath.ZERO
    assert case_of(1) is CasePath.ALL_ONES
    # dropping ones must not change anything else
    assert value(w, 1, w * 2) == value(w, w * 2)


# -- case 1: provably no value -------------------------------------------------


def test_case1_infinite():
    inst = Instance.of(w1 + 1, w + 1)
    assert case_of(w1 + 1, w + 1) is CasePath.C1
    assert isinstance(p_top(inst), Infinite)
    assert relation_holds(initial_ordinal(5), inst) is RelationVerdict.FAILS
    assert case_of((w1 * 2, 2)) is CasePath.C1
    assert case_of(w2, w + 1) is CasePath.C1


# -- case 2: a unique target above w_1 ------------------------------------------


def test_case2a_not_power():
    inst = Instance.of((w1 + 1, 1), (2, A0))
    assert classify_case(normalize(inst)) is CasePath.C2aI
    assert p_top(inst) == Exists(mul(w1 + 1, w1))


def test_case2a_power_high_cofinality():
    assert case_of((w2, 1), (2, A0)) is CasePath.C2aIIA
    assert value((w2, 1), (2, A0)) == w2


def test_case2a_power_middle_cofinality():
    # cf(w^(w_1*2)) = w_1 <= aleph_1 yet uncountable
    big = wp(as_exponent(w1 * 2))
    assert case_of((big, 1), (2, A1)) is CasePath.C2aIIB
    assert value((big, 1), (2, A1)) == mul(big, w2)


def test_case2a_power_countable_cofinality():
    # exponent w_1 + w has tail rank 1 < w_1: multiply by the successor
    big = wp(as_exponent(w1 + w))
    assert case_of((big, 1), (2, A0)) is CasePath.C2aIIC_lt
    assert value((big, 1), (2, A0)) == mul(big, w1)
    # exponent w^(w_1+1) still has countable cofinality, tail rank w_1+1
    big = wp(as_exponent(wp(w1 + 1)))
    assert case_of((big, 1), (2, A0)) is CasePath.C2aIIC_gt
    assert value((big, 1), (2, A0)) == big


def test_case2b():
    assert case_of(w2, w) is CasePath.C2bI
    assert value(w2, w) == w2
    assert case_of(w1 + 1, w) is CasePath.C2bII
    assert value(w1 + 1, w) == mul(w1 + 1, w)


def test_case2c_single_target_uses_class_floor():
    assert case_of(w1 * 2 + 5) is CasePath.C2cI
    assert value(w1 * 2 + 5) == w1 * 2 + 1
    assert value(w1 * 2) == w1 * 2
    assert value(w2 + 1) == w2 + 1


def test_case2c_power_with_finite_company():
    assert case_of(w2, 3) is CasePath.C2cI
    assert value(w2, 3) == w2


def test_case2c_general():
    inst = Instance.of((w1 + 1, 1), (2, 1))
    assert classify_case(normalize(inst)) is CasePath.C2cII
    assert p_top(inst) == Exists(w1 * 2 + 1)
    assert value(w1 * 3, 2, 3) == w1 * 5 + 1
    assert value(w1 + 5, 4) == w1 * 4 + 1


# -- cases 3 to 5: the uncountable frontier ------------------------------------


def test_case3_independent():
    result = p_top(Instance.of(w1, w1))
    assert isinstance(result, Independent)
    assert result.zfc_lower == w2
    assert "Prikry" in result.consistent_infinite
    assert "supercompact" in result.consistent_equal_lower
    assert "Mahlo" in result.equiconsistency
    big = p_top(Instance.of((w1, Cardinal.aleph(2))))
    assert isinstance(big, Independent)
    assert big.zfc_lower == initial_ordinal(3)
    verdict = relation_holds(w2, Instance.of(w1, w1))
    assert verdict is RelationVerdict.INDEPENDENT_UNKNOWN
    assert relation_holds(w1, Instance.of(w1, w1)) is RelationVerdict.FAILS


def test_case4_single_w1():
    assert case_of(w1, w) is CasePath.C4
    assert value(w1, w) == w1
    assert value((w1, 1), (w, A1)) == w2


def test_case5_countable_targets_many_colours():
    assert case_of((w, A0)) is CasePath.C5
    assert value((w, A0)) == w1
    assert value((w * 2 + 1, A1)) == w2


# -- case 6: countable targets, finitely many colours ---------------------------


def test_case6a_finite():
    assert case_of(3, 4) is CasePath.C6a
    assert value(3, 4) == from_int(6)
    assert value((2, 3)) == from_int(4)
    assert value(5) == from_int(5)


def test_case6b_powers():
    assert case_of(w, w * 2) is CasePath.C6b
    assert value(w, w * 2) == wp(2)
    assert value(wp(w), wp(2)) == wp(w)
    assert value(w, w) == w
    assert value(wp(3), wp(3)) == wp(5)
    # Baumgartner's family: both targets w^(w^a*(m+1))
    for a in (ZERO, ONE, from_int(2), w):
        for m in range(4):
            t = wp(mul(wp(a), from_int(m + 1)))
            assert value(t, t) == wp(mul(wp(a), from_int(2 * m + 1)))


def test_case6b_fixed_points():
    # p(a, a) = a exactly for the multiplicatively closed powers w^(w^b)
    for t in (w, wp(w), wp(wp(2)), wp(wp(w))):
        assert value(t, t) == t
    for t in (wp(2), wp(3), wp(w + 1), wp(w * 2)):
        assert value(t, t) > t


def test_case6c_distinguished():
    assert case_of((w * 2, 2)) is CasePath.C6cI
    assert value((w * 2, 2)) == wp(2) * 2
    assert case_of(wp(w) * 2, w * 2) is CasePath.C6cI
    assert value(wp(w) * 2, w * 2) == wp(w + 1) * 2
    assert value(w * 3, w * 2) == wp(2) * 3


def test_case6c_general():
    assert case_of(w * 2, w * 2 + 1) is CasePath.C6cII
    assert value(w * 2, w * 2 + 1) == wp(2) * 2 + 1
    assert value(wp(2) * 2, w * 2 + 1) == wp(3) * 2 + 1
    assert value(w + 1, w + 1) == wp(2) + 1
    assert value(w + 1, w + 1, w + 1) == wp(3) + 1
    assert value(w + 1, 3) == w * 3 + 1
    assert value(w * 2 + 1, 3) == w * 4 + 1


def test_case6_trail_is_reported():
    a = analyze(Instance.of(w * 2, w * 2 + 1))
    assert a.case is CasePath.C6cII
    assert any("power of w" in step for step in a.trail)
    assert a.result == Exists(wp(2) * 2 + 1)


# -- helpers -------------------------------------------------------------------


def test_minimal_omega_power_bound():
    assert minimal_omega_power_bound(ONE) == ZERO
    assert minimal_omega_power_bound(from_int(2)) == ONE
    assert minimal_omega_power_bound(w) == ONE
    assert minimal_omega_power_bound(w + 1) == from_int(2)
    assert minimal_omega_power_bound(wp(2)) == from_int(2)
    assert minimal_omega_power_bound(wp(w)) == w
    assert minimal_omega_power_bound(wp(w) + 1) == w + 1


def test_case6_decompose():
    assert case6_decompose(w * 2) == (ONE, 1, True)
    assert case6_decompose(w * 2 + 1) == (ONE, 2, False)
    assert case6_decompose(wp(2) * 3 + w) == (from_int(2), 3, False)
    assert case6_decompose(from_int(7)) == (ZERO, 7, False)
    with pytest.raises(PowerOfOmegaInput):
        case6_decompose(wp(2))
    with pytest.raises(ValueError):
        case6_decompose(ONE)
    with pytest.raises(ValueError):
        case6_decompose(w1 + 1)


def test_relation_verdicts():
    inst = Instance.of(w, w * 2)
    assert relation_holds(wp(2), inst) is RelationVerdict.HOLDS
    assert relation_holds(wp(2) + 1, inst) is RelationVerdict.HOLDS
    assert relation_holds(w * 9 + 5, inst) is RelationVerdict.FAILS
