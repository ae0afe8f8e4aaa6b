"""Tests for flow state sums: expansions, brackets, forms, calibration."""

import pytest
from hypothesis import given, settings, strategies as st

from webkup.qlaurent import LaurentPoly, ONE, qint
from webkup.webs import LadderWeb, Slice, close, ell
from webkup.flows import (
    FULL,
    bracket,
    build_constraints,
    calibrate_weight_table,
    colorset_for,
    colorset_state,
    count_weight_zero_flows,
    enumerate_flows,
    expansion,
    kuperberg_form,
    kuperberg_form_vec,
    lusztig_form,
    minus_weight,
    plus_weight,
    slice_transitions,
    verify_frozen_table,
)

CIRCLE = LadderWeb((0, 3), (Slice("+", 1), Slice("-", 1)))
CIRCLE2 = LadderWeb((3, 0), (Slice("-", 1), Slice("+", 1)))
ARC = LadderWeb((0, 3), (Slice("+", 1),))
TRIPOD = LadderWeb((3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1)))
THETA = close(TRIPOD, TRIPOD)


def P(pairs):
    return LaurentPoly(dict(pairs))


def test_colorset_state():
    assert colorset_state(frozenset((1,))) == 1
    assert colorset_state(frozenset((1, 0))) == 1
    assert colorset_state(frozenset((1, -1))) == 0
    assert colorset_for(2, -1) == frozenset((0, -1))


def test_frozen_weight_table_satisfies_constraints():
    verify_frozen_table()


def test_cup_weights():
    assert plus_weight(frozenset(), FULL, 1) == 0
    assert plus_weight(frozenset(), FULL, 0) == -1
    assert plus_weight(frozenset(), FULL, -1) == -2


def test_reflection_weight():
    # cap weights mirror the cup weights
    assert minus_weight(FULL, frozenset(), -1) == 0
    assert minus_weight(FULL, frozenset(), 0) == -1
    assert minus_weight(FULL, frozenset(), 1) == -2


def test_circle_bracket():
    assert bracket(CIRCLE) == qint(3)
    assert bracket(CIRCLE2) == qint(3)
    assert sorted(f.weight for f in enumerate_flows(CIRCLE)) == [-2, 0, 2]


def test_theta_bracket():
    assert bracket(THETA) == qint(2) * qint(3)
    assert sorted(f.weight for f in enumerate_flows(THETA)) == [-3, -1, -1, 1, 1, 3]


def test_empty_web_bracket():
    w = LadderWeb((), ())
    assert bracket(w) == ONE


def test_bracket_needs_closed_web():
    with pytest.raises(ValueError):
        bracket(ARC)


def test_arc_expansion():
    assert expansion(ARC) == {
        (1, -1): ONE,
        (0, 0): P([(-1, 1)]),
        (-1, 1): P([(-2, 1)]),
    }


def test_tripod_expansion():
    assert expansion(TRIPOD) == {
        (1, 0, -1): ONE,
        (1, -1, 0): P([(-1, 1)]),
        (0, 1, -1): P([(-1, 1)]),
        (0, -1, 1): P([(-2, 1)]),
        (-1, 1, 0): P([(-2, 1)]),
        (-1, 0, 1): P([(-3, 1)]),
    }


def test_flow_counts():
    assert len(enumerate_flows(TRIPOD)) == 6
    assert len(enumerate_flows(ARC)) == 3
    assert count_weight_zero_flows(CIRCLE) == 1
    assert count_weight_zero_flows(TRIPOD) == 1
    assert count_weight_zero_flows(THETA) == 0  # weights are all odd


def test_divided_power_transitions():
    got = sorted(
        (tuple(sorted(X)), w) for X, w in slice_transitions("+", 2, frozenset(), FULL)
    )
    assert got == [((-1, 0), -2), ((-1, 1), -1), ((0, 1), 0)]
    full = list(slice_transitions("+", 3, frozenset(), FULL))
    assert full == [(FULL, 0)]


def test_kuperberg_form_values():
    assert kuperberg_form(ARC, ARC) == P([(4, 1), (2, 1), (0, 1)])
    assert kuperberg_form(TRIPOD, TRIPOD) == P([(6, 1), (4, 2), (2, 2), (0, 1)])


def test_lusztig_form_values():
    assert lusztig_form(ARC, ARC) == P([(0, 1), (-2, 1), (-4, 1)])
    assert lusztig_form(TRIPOD, TRIPOD) == P([(0, 1), (-2, 2), (-4, 2), (-6, 1)])


def test_form_normalizations_agree():
    for u in (ARC, TRIPOD):
        n = ell(u.top_signs())
        assert kuperberg_form(u, u) == lusztig_form(u, u).shift(2 * n)


def test_form_vec_sesquilinear():
    webs = {"a": ARC}
    f = P([(1, 2)])  # 2q
    lhs = kuperberg_form_vec({"a": f}, {"a": ONE}, webs)
    assert lhs == f.bar() * kuperberg_form(ARC, ARC)
    rhs = kuperberg_form_vec({"a": ONE}, {"a": f}, webs)
    assert rhs == f * kuperberg_form(ARC, ARC)


def test_closed_values_bar_invariant():
    for w in (CIRCLE, CIRCLE2, THETA, close(ARC, ARC)):
        assert bracket(w).is_bar_invariant()


def test_bracket_reflection_invariant():
    for w in (CIRCLE, THETA, close(ARC, ARC)):
        assert bracket(w.reflect()) == bracket(w)


def test_calibration_is_unique_with_gauge():
    sols = calibrate_weight_table(with_gauge=True, all_solutions=True)
    assert len(sols) == 1


def test_calibration_six_solutions_without_gauge():
    # the color-relabeling orbit
    sols = calibrate_weight_table(with_gauge=False, all_solutions=True)
    assert len(sols) == 6


def test_constraint_count_sane():
    cons = build_constraints(with_gauge=True)
    assert len(cons) > len(build_constraints(with_gauge=False))


@given(st.integers(1, 3), st.integers(0, 2))
def test_power_slices_compose(power, shift):
    # a power move on the full column is a single transition of weight 0
    A = frozenset()
    B = FULL
    if power == 3:
        assert list(slice_transitions("+", 3, A, B)) == [(FULL, 0)]
    else:
        for X, w in slice_transitions("+", power, A, B):
            assert len(X) == power


FLOW_WEBS = [CIRCLE, CIRCLE2, ARC, TRIPOD, THETA]


@given(st.sampled_from(FLOW_WEBS))
@settings(max_examples=20, deadline=None)
def test_expansion_matches_flow_enumeration(web):
    exp = expansion(web)
    flows = enumerate_flows(web)
    by_state: dict = {}
    for f in flows:
        by_state.setdefault(f.boundary, LaurentPoly.zero())
        by_state[f.boundary] = by_state[f.boundary] + LaurentPoly.monomial(f.weight)
    assert by_state == {k: v for k, v in exp.items() if not v.is_zero()}
