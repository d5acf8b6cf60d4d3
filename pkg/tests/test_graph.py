import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adhc_lab import (
    INFINITE,
    AntidirectedWalk,
    DuplicateArcError,
    LoopError,
    OrientedGraph,
    Step,
    TwoCycleError,
    VertexRangeError,
    VertexSet,
    degree_profile,
    sigma_plus_minus,
    validate_antidirected,
)
from adhc_lab.graph import exact
from oracles import arc_set, sigma_oracle
from strategies import graph_and_perm, oriented_graphs

SQUARE = OrientedGraph.from_arcs(4, [(0, 1), (2, 1), (2, 3), (0, 3)])


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(LoopError):
            OrientedGraph.from_arcs(3, [(1, 1)])

    def test_rejects_two_cycle(self):
        with pytest.raises(TwoCycleError):
            OrientedGraph.from_arcs(3, [(0, 1), (1, 0)])

    def test_rejects_duplicate(self):
        with pytest.raises(DuplicateArcError):
            OrientedGraph.from_arcs(3, [(0, 1), (0, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(VertexRangeError):
            OrientedGraph.from_arcs(3, [(0, 3)])
        with pytest.raises(VertexRangeError):
            OrientedGraph.from_arcs(3, [(-1, 2)])

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            OrientedGraph.from_arcs(2, [(0, 0)])

    def test_inconsistent_rows_rejected(self):
        with pytest.raises(ValueError):
            OrientedGraph(2, (0b10, 0), (0, 0))

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            OrientedGraph.empty(65)

    def test_degrees_and_arcs(self):
        assert SQUARE.arc_count == 4
        assert SQUARE.out_degree(0) == 2 and SQUARE.in_degree(0) == 0
        assert SQUARE.in_degree(1) == 2
        assert sorted(SQUARE.arcs()) == [(0, 1), (0, 3), (2, 1), (2, 3)]
        assert SQUARE.arcs_between([0, 2], [1, 3]) == 4
        assert SQUARE.arcs_between([1, 3], [0, 2]) == 0
        assert SQUARE.out_neighbors(2).to_list() == [1, 3]
        assert SQUARE.out_degree(0, within=[1]) == 1


class TestVertexSet:
    def test_algebra(self):
        a = VertexSet.of(6, [0, 1, 2])
        b = VertexSet.of(6, [2, 3])
        assert (a | b).to_list() == [0, 1, 2, 3]
        assert (a & b).to_list() == [2]
        assert (a - b).to_list() == [0, 1]
        assert (a ^ b).to_list() == [0, 1, 3]
        assert a.complement().to_list() == [3, 4, 5]
        assert len(a) == 3 and 2 in a and 5 not in a
        assert VertexSet.of(6, [0]).issubset(a)
        assert a.isdisjoint(VertexSet.of(6, [4]))
        assert not VertexSet.empty(6)
        assert len(VertexSet.full(6)) == 6

    def test_out_of_universe(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [3])

    def test_mixed_universes(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [0]) | VertexSet.of(4, [0])

    @given(st.sets(st.integers(0, 9)), st.sets(st.integers(0, 9)))
    def test_matches_python_sets(self, x, y):
        a, b = VertexSet.of(10, x), VertexSet.of(10, y)
        assert set(a | b) == x | y
        assert set(a & b) == x & y
        assert set(a - b) == x - y
        assert set(a.complement()) == set(range(10)) - x


class TestSigma:
    def test_square(self):
        # non-arcs x->y: the best is 1 -> 0 with d+(1) + d-(0) = 0
        assert sigma_plus_minus(SQUARE) == 0

    def test_small_cases_are_infinite(self):
        assert sigma_plus_minus(OrientedGraph.empty(0)) == INFINITE
        assert sigma_plus_minus(OrientedGraph.empty(1)) == INFINITE
        assert math.isinf(sigma_plus_minus(OrientedGraph.empty(1)))

    def test_single_arc(self):
        g = OrientedGraph.from_arcs(2, [(0, 1)])
        # only pair without an arc is 1 -> 0: d+(1) + d-(0) = 0
        assert sigma_plus_minus(g) == 0

    def test_ordered_pairs(self):
        # every pair is adjacent, but each arc leaves one ordered pair uncovered
        g = OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert sigma_plus_minus(g) == 2

    @given(oriented_graphs())
    def test_matches_definition(self, g):
        assert sigma_plus_minus(g) == sigma_oracle(g.n, arc_set(g))

    @given(graph_and_perm())
    def test_relabel_invariant(self, gp):
        g, perm = gp
        assert sigma_plus_minus(g.relabel(perm)) == sigma_plus_minus(g)

    @given(oriented_graphs())
    def test_reverse_invariant(self, g):
        assert sigma_plus_minus(g.reverse()) == sigma_plus_minus(g)

    @given(oriented_graphs(min_n=2), st.data())
    def test_monotone_under_arc_addition(self, g, data):
        free = [(i, j) for i in range(g.n) for j in range(g.n)
                if i != j and not g.has_arc(i, j) and not g.has_arc(j, i)]
        if not free:
            return
        arc = data.draw(st.sampled_from(free))
        assert sigma_plus_minus(g.add_arcs([arc])) >= sigma_plus_minus(g)

    @given(oriented_graphs(min_n=1))
    def test_profile(self, g):
        prof = degree_profile(g)
        assert prof.delta0 == min(min(g.out_degree(v), g.in_degree(v)) for v in range(g.n))
        assert sum(o for o, _ in prof.per_vertex) == g.arc_count


class TestExact:
    def test_decimal_literals_are_exact(self):
        from fractions import Fraction

        assert exact(0.3) == Fraction(3, 10)
        assert exact("1/7") == Fraction(1, 7)
        assert exact(2) == 2


class TestWalks:
    def test_valid_cycle(self):
        walk = AntidirectedWalk.from_vertices(SQUARE, [0, 1, 2, 3], closed=True)
        assert walk.directions == (Step.FWD, Step.BWD, Step.FWD, Step.BWD)
        assert validate_antidirected(SQUARE, walk)
        assert walk.is_source(0) and walk.is_sink(1)

    def test_directed_path_rejected(self):
        g = OrientedGraph.from_arcs(3, [(0, 1), (1, 2)])
        walk = AntidirectedWalk.from_vertices(g, [0, 1, 2])
        check = validate_antidirected(g, walk)
        assert not check and check.code == "alternation"

    @pytest.mark.parametrize(
        "walk, code",
        [
            (AntidirectedWalk((0, 1), (Step.FWD, Step.FWD)), "step_count"),
            (AntidirectedWalk((0, 9), (Step.FWD,)), "vertex_range"),
            (AntidirectedWalk((0, 1, 0), (Step.FWD, Step.BWD)), "repeated_vertex"),
            (AntidirectedWalk((0, 1), (Step.FWD, Step.BWD), True), "too_short"),
            (AntidirectedWalk((0, 1, 2), (Step.FWD, Step.BWD, Step.FWD), True), "odd_closed"),
            (AntidirectedWalk((1, 0), (Step.FWD,)), "missing_arc"),
        ],
    )
    def test_failure_codes(self, walk, code):
        assert validate_antidirected(SQUARE, walk).code == code

    def test_missing_arc_in_from_vertices(self):
        with pytest.raises(ValueError):
            AntidirectedWalk.from_vertices(SQUARE, [0, 2])

    def test_reversed_stays_valid(self):
        walk = AntidirectedWalk.from_vertices(SQUARE, [3, 0, 1, 2])
        assert validate_antidirected(SQUARE, walk)
        assert validate_antidirected(SQUARE, walk.reversed())
        cyc = AntidirectedWalk.from_vertices(SQUARE, [0, 1, 2, 3], closed=True)
        assert validate_antidirected(SQUARE, cyc.reversed())

    def test_json(self):
        walk = AntidirectedWalk.from_vertices(SQUARE, [0, 1, 2])
        assert walk.to_json() == {"witness": [0, 1, 2], "directions": ["fwd", "bwd"], "closed": False}
