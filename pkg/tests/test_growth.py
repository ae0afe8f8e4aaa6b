"""Tests for the growth algorithm and the web basis."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from webkup.qlaurent import LaurentPoly, ONE
from webkup.webs import LadderWeb, Slice
from webkup.flows import count_weight_zero_flows, expansion
from webkup.growth import (
    GrowthStuck,
    _h_strategy_keys,
    canonical_rule_tables,
    construct_flow,
    dominant_states,
    enumerate_basis,
    expand_states,
    growth,
    is_dominant_closed,
    web_space,
)
from webkup.oracles import invariant_dim


def test_derived_rule_tables():
    t = canonical_rule_tables()
    assert set(t[("arc", "+", "-")]) == {(1, -1)}
    assert set(t[("arc", "-", "+")]) == {(1, -1)}
    assert set(t[("y", "+", "+")]) == {(1, 0), (1, -1), (0, -1)}
    assert set(t[("y", "-", "-")]) == {(1, 0), (1, -1), (0, -1)}
    # the exchange strategy only walks a 0 state left past a nonzero one
    assert _h_strategy_keys("+", "-") == {(1, 0): -1, (-1, 0): 1}
    assert _h_strategy_keys("-", "+") == {(1, 0): 1, (-1, 0): -1}


def test_expand_states():
    assert expand_states("+-", (1, -1)) == (1, 0, -1)
    assert expand_states("o-x", (0,)) == (1, -1)
    with pytest.raises(ValueError):
        expand_states("++", (1,))


def test_dominance_examples():
    assert is_dominant_closed("+-", (1, -1))
    assert not is_dominant_closed("+-", (0, 0))  # word 0,1,-1 fails ballot
    assert is_dominant_closed("+++", (1, 0, -1))
    assert not is_dominant_closed("+++", (0, 1, -1))
    assert is_dominant_closed("", ())


def test_growth_arc():
    gw = growth("+-", (1, -1))
    assert gw.web == LadderWeb((0, 3), (Slice("+", 1),))
    assert gw.flow.weight == 0


def test_growth_tripod():
    gw = growth("+++", (1, 0, -1))
    assert gw.web == LadderWeb(
        (3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1))
    )
    assert gw.flow.moves == (frozenset({-1}), frozenset({-1}), frozenset({0}))


def test_growth_nested_arcs():
    gw = growth("++--", (1, 1, -1, -1))
    assert gw.web == LadderWeb(
        (0, 3, 0, 3),
        (Slice("+", 1), Slice("-", 2, 2), Slice("+", 3), Slice("+", 2)),
    )


def test_growth_h_web():
    gw = growth("++--", (1, 0, 0, -1))
    assert gw.web == LadderWeb(
        (0, 3, 3, 0),
        (
            Slice("+", 1),
            Slice("+", 2),
            Slice("-", 3, 2),
            Slice("+", 1),
            Slice("-", 2, 2),
            Slice("-", 1),
        ),
    )


def test_growth_seven_strands():
    # a longer trace exercising transport, joins and the exchange rule
    gw = growth("+-+-+++", (1, 1, 0, 0, -1, 0, -1))
    assert gw.web.bottom_weight == (0, 3, 3, 0, 0, 3, 0)
    assert gw.flow.weight == 0
    assert expansion(gw.web)[(1, 1, 0, 0, -1, 0, -1)] == ONE
    assert count_weight_zero_flows(gw.web) == 1


def test_growth_stuck_on_non_dominant():
    with pytest.raises(GrowthStuck):
        growth("+-", (0, 0))
    with pytest.raises(GrowthStuck):
        growth("++", (1, 1))


def test_termination_iff_dominance_small():
    for n in range(0, 6):
        for signs in ("".join(p) for p in product("+-", repeat=n)):
            for J in product((1, 0, -1), repeat=n):
                dom = is_dominant_closed(signs, J)
                try:
                    growth(signs, J)
                    assert dom, (signs, J)
                except GrowthStuck:
                    assert not dom, (signs, J)


@given(st.text(alphabet="+-", min_size=6, max_size=7),
       st.data())
@settings(max_examples=60, deadline=None)
def test_termination_iff_dominance_random(signs, data):
    J = tuple(data.draw(st.sampled_from((1, 0, -1))) for _ in signs)
    dom = is_dominant_closed(signs, J)
    try:
        gw = growth(signs, J)
        assert dom
        assert gw.flow.weight == 0
    except GrowthStuck:
        assert not dom


def test_construct_flow_boundary():
    gw = construct_flow("+-", (0, 0))
    assert gw.flow.boundary == (0, 0)
    gw = construct_flow("+-", (-1, 1))
    assert gw.flow.boundary == (-1, 1)


def test_construct_flow_prefers_canonical():
    for signs, J in [("++--", (1, 1, -1, -1)), ("++--", (1, 0, 0, -1))]:
        assert construct_flow(signs, J).web == growth(signs, J).web


def test_basis_sizes_match_invariant_dim():
    for n in range(0, 7):
        for signs in ("".join(p) for p in product("+-", repeat=n)):
            assert len(dominant_states(signs)) == invariant_dim(signs)


def test_basis_sizes_enhanced_boundaries():
    for signs in ["+ox-", "o+x+--", "xx++--o", "+oxo-", "x", "oo", ""]:
        assert len(enumerate_basis(signs)) == invariant_dim(signs)


def test_expansions_unitriangular():
    ws = web_space("+-+-")
    states = sorted(ws.basis, reverse=True)
    for J in states:
        exp = ws.expansions[J]
        assert exp[J] == ONE
        for K, c in exp.items():
            if not c.is_zero():
                assert K <= J


def test_every_basis_web_has_unique_weight_zero_flow():
    for signs in ["+-", "+++", "++--", "+-+-", "++-+--"]:
        for J, w in enumerate_basis(signs).items():
            assert count_weight_zero_flows(w) == 1


def test_reduce_to_basis_roundtrip():
    ws = web_space("+-+-")
    coeffs = {J: LaurentPoly({i - 1: i + 1}) for i, J in enumerate(ws.basis)}
    vec: dict = {}
    for J, c in coeffs.items():
        for k, v in ws.expansions[J].items():
            vec[k] = vec.get(k, LaurentPoly.zero()) + c * v
    assert ws.reduce_to_basis(vec) == coeffs
