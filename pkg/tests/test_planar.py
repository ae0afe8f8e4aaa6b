"""Tests for the independent relation-rewriting evaluator."""

import pytest
from hypothesis import given, settings, strategies as st

from webkup.qlaurent import qint
from webkup.webs import LadderWeb, Slice, close
from webkup.flows import bracket
from webkup.planar import PlanarWeb, rewrite_bracket
from webkup.growth import enumerate_basis

CIRCLE = LadderWeb((0, 3), (Slice("+", 1), Slice("-", 1)))
CIRCLE2 = LadderWeb((3, 0), (Slice("-", 1), Slice("+", 1)))
TRIPOD = LadderWeb((3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1)))
THETA = close(TRIPOD, TRIPOD)
EMPTY = LadderWeb((), ())


def test_circle_value():
    assert rewrite_bracket(CIRCLE) == qint(3)
    assert rewrite_bracket(CIRCLE2) == qint(3)


def test_theta_value():
    assert rewrite_bracket(THETA) == qint(2) * qint(3)


def test_empty_value():
    assert rewrite_bracket(EMPTY).is_one()


def test_circle_is_one_loop():
    pw = PlanarWeb.from_ladder(CIRCLE)
    assert pw.loops == 1
    assert not pw.nodes


def test_theta_graph_shape():
    pw = PlanarWeb.from_ladder(THETA)
    assert len(pw.nodes) == 2
    assert len(pw.edges) == 3
    kinds = sorted(n.kind for n in pw.nodes.values())
    assert kinds == ["sink", "source"]


def test_open_web_rejected():
    arc = LadderWeb((0, 3), (Slice("+", 1),))
    with pytest.raises(ValueError):
        PlanarWeb.from_ladder(arc)


def _closed_pairs(signs):
    basis = enumerate_basis(signs)
    webs = list(basis.values())
    return [close(u, v) for u in webs for v in webs]


ROUTE_CASES = (
    [CIRCLE, CIRCLE2, THETA, EMPTY]
    + _closed_pairs("++--")
    + _closed_pairs("+-+-")
    + _closed_pairs("+++---")[:6]
)


@pytest.mark.parametrize("idx", range(len(ROUTE_CASES)))
def test_routes_agree(idx):
    web = ROUTE_CASES[idx]
    assert rewrite_bracket(web) == bracket(web)


@given(st.sampled_from(ROUTE_CASES))
@settings(max_examples=15, deadline=None)
def test_rewrite_value_bar_invariant(web):
    assert rewrite_bracket(web).is_bar_invariant()
