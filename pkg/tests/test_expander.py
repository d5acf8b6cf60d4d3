from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adhc_lab import ExtremalSpec, OrientedGraph, RandomModel, generate_extremal, random_oriented
from adhc_lab.generators import almost_regular_tournament
from adhc_lab.structure import (
    ExpanderParams,
    ExpanderTooLarge,
    Mode,
    is_robust_outexpander,
    robust_out_neighborhood,
    size_window,
)
from oracles import arc_set, expander_oracle, is_violation
from strategies import oriented_graphs

GRID = [Fraction(1, 20), Fraction(1, 10), Fraction(1, 5)]


def test_params_are_exact():
    p = ExpanderParams(0.1, 0.3)
    assert p.nu == Fraction(1, 10) and p.tau == Fraction(3, 10)


@pytest.mark.parametrize("nu, tau", [(0, 0.1), (0.2, 0.1), (0.1, 1), (-0.1, 0.2)])
def test_params_validation(nu, tau):
    with pytest.raises(ValueError):
        ExpanderParams(nu, tau)


@pytest.mark.parametrize(
    "n, tau, window",
    [(10, Fraction(1, 10), (2, 8)), (10, Fraction(1, 5), (3, 7)), (12, Fraction(1, 4), (4, 8)), (7, Fraction(1, 3), (3, 4))],
)
def test_size_window_strict(n, tau, window):
    lo, hi = size_window(n, tau)
    assert (lo, hi) == window
    assert tau * n < lo and hi < (1 - tau) * n
    assert not tau * n < lo - 1 and not hi + 1 < (1 - tau) * n


def test_robust_out_neighborhood():
    g = OrientedGraph.from_arcs(4, [(0, 2), (1, 2), (0, 3)])
    # n = 4, nu = 1/2: a vertex needs >= 2 in-neighbours in S
    assert robust_out_neighborhood(g, [0, 1], Fraction(1, 2)).to_list() == [2]
    assert robust_out_neighborhood(g, [0, 1], Fraction(1, 4)).to_list() == [2, 3]


def test_empty_window_is_vacuous():
    rep = is_robust_outexpander(OrientedGraph.empty(3), ExpanderParams(Fraction(1, 3), Fraction(1, 3)))
    assert rep.verdict and rep.conclusive


def test_empty_graph_fails_with_witness():
    g = OrientedGraph.empty(8)
    rep = is_robust_outexpander(g, ExpanderParams(0.1, 0.1))
    assert not rep.verdict
    assert is_violation(8, set(), set(rep.witness), Fraction(1, 10), Fraction(1, 10))
    assert rep.rn_plus.to_list() == []


@settings(max_examples=120)
@given(oriented_graphs(min_n=2, max_n=10), st.sampled_from(GRID), st.sampled_from(GRID))
def test_exact_matches_oracle(g, a, b):
    nu, tau = min(a, b), max(a, b)
    rep = is_robust_outexpander(g, ExpanderParams(nu, tau), Mode.EXACT)
    ref = expander_oracle(g.n, arc_set(g), nu, tau)
    assert rep.verdict == (ref is None)
    if not rep.verdict:
        assert is_violation(g.n, arc_set(g), set(rep.witness), nu, tau)
        assert rep.rn_plus == robust_out_neighborhood(g, rep.witness, nu)


@pytest.mark.parametrize("family, s", [("C", 1), ("C", 3), ("B", 3), ("A", 1)])
def test_families_are_not_expanders(family, s):
    g = generate_extremal(ExtremalSpec(family, s)).graph
    rep = is_robust_outexpander(g, ExpanderParams(0.1, 0.1))
    assert not rep.verdict
    assert is_violation(g.n, arc_set(g), set(rep.witness), Fraction(1, 10), Fraction(1, 10))


def test_regular_tournament_expands():
    g = almost_regular_tournament(11)
    assert is_robust_outexpander(g, ExpanderParams(Fraction(1, 11), Fraction(3, 11))).verdict


def test_exact_size_cap():
    g = OrientedGraph.empty(21)
    with pytest.raises(ExpanderTooLarge):
        is_robust_outexpander(g, ExpanderParams(0.1, 0.1), Mode.EXACT)
    assert not is_robust_outexpander(g, ExpanderParams(0.1, 0.1), "exact", max_exact_n=21).verdict


def test_sampled_mode():
    g = OrientedGraph.empty(30)
    rep = is_robust_outexpander(g, ExpanderParams(0.1, 0.1), Mode.SAMPLED, samples=50)
    assert not rep.verdict and rep.conclusive
    t = almost_regular_tournament(25)
    rep = is_robust_outexpander(t, ExpanderParams(Fraction(1, 25), Fraction(2, 5)), "sampled", samples=200, seed=3)
    assert rep.verdict and not rep.conclusive


def test_sampled_is_seeded():
    g = random_oriented(RandomModel(30, 0.2, 1))
    p = ExpanderParams(0.1, 0.2)
    a = is_robust_outexpander(g, p, Mode.SAMPLED, samples=100, seed=9)
    b = is_robust_outexpander(g, p, Mode.SAMPLED, samples=100, seed=9)
    assert a == b


def test_report_json():
    rep = is_robust_outexpander(OrientedGraph.empty(6), ExpanderParams(0.1, 0.1))
    out = rep.to_json()
    assert out["verdict"] is False and out["nu"] == "1/10"
    assert out["witness"] == rep.witness.to_list()
