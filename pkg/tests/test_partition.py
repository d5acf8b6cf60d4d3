from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from adhc_lab import ExtremalSpec, OrientedGraph, Partition4, PartitionError, generate_extremal
from adhc_lab.graph import VertexSet
from adhc_lab.structure import (
    ExpanderParams,
    GoodBadLabels,
    UnassignableVertex,
    acceptable,
    check_nice_partition,
    classify_good_bad,
    derive_nice_partition,
    find_special_arcs,
    find_two_disjoint_special_arcs,
    is_robust_outexpander,
    is_special,
    reassign_by_acceptability,
)
from strategies import graph_with_partition, oriented_graphs


def good_reference(g, parts, v, slack):
    A, B, C, D = (set(p) for p in parts)
    outs = {u for u in range(g.n) if g.has_arc(v, u)}
    ins = {u for u in range(g.n) if g.has_arc(u, v)}
    if v in A:
        return (len(outs & A) >= Fraction(len(A), 2) - slack and len(ins & A) >= Fraction(len(A), 2) - slack
                and len(outs & B) >= len(B) - slack and len(ins & D) >= len(D) - slack)
    if v in B:
        return len(outs & C) >= len(C) - slack and len(ins & A) >= len(A) - slack
    if v in C:
        return (len(outs & C) >= Fraction(len(C), 2) - slack and len(ins & C) >= Fraction(len(C), 2) - slack
                and len(outs & D) >= len(D) - slack and len(ins & B) >= len(B) - slack)
    return (len(outs & B) >= Fraction(len(C), 2) - slack and len(ins & B) >= Fraction(len(A), 2) - slack
            and len(outs & A) >= len(A) - slack and len(ins & C) >= len(C) - slack)


class TestPartition4:
    def test_valid(self):
        p = Partition4.from_lists(5, [0], [1, 2], [], [3, 4])
        assert p.sizes() == (1, 2, 0, 2) and p.n == 5
        assert p.part_of(2) == "B"
        assert p.swap_ac().sizes() == (0, 2, 1, 2)
        assert p.to_json() == {"A": [0], "B": [1, 2], "C": [], "D": [3, 4]}

    def test_overlap(self):
        with pytest.raises(PartitionError):
            Partition4.from_lists(3, [0], [0, 1], [2], [])

    def test_not_covering(self):
        with pytest.raises(PartitionError):
            Partition4.from_lists(3, [0], [1], [], [])

    def test_mixed_universe(self):
        with pytest.raises(PartitionError):
            Partition4(VertexSet.of(2, [0]), VertexSet.of(2, [1]), VertexSet.empty(3), VertexSet.empty(2))


class TestDerive:
    @settings(max_examples=150)
    @given(oriented_graphs(min_n=4, max_n=10), st.sampled_from([Fraction(1, 10), Fraction(1, 5)]))
    def test_properties(self, g, nu):
        rep = is_robust_outexpander(g, ExpanderParams(nu, nu))
        assume(not rep.verdict)
        dp = derive_nice_partition(g, rep)
        p, h = dp.partition, dp.graph
        assert p.n == g.n
        na, _, nc, _ = p.sizes()
        assert na <= nc
        assert h.arcs_between(p.a | p.d, p.c | p.d) <= nu * g.n * g.n
        assert h == (g.reverse() if dp.reversed else g)

    def test_parts_follow_the_witness(self):
        g = generate_extremal(ExtremalSpec("C", 2)).graph
        rep = is_robust_outexpander(g, ExpanderParams(0.1, 0.1))
        dp = derive_nice_partition(g, rep)
        s, rn = rep.witness, rep.rn_plus
        if not dp.reversed:
            assert dp.partition.a == rn & s
            assert dp.partition.b == rn - s
            assert dp.partition.d == s - rn

    def test_reversal_when_a_is_larger(self):
        # S = {0, 1, 2, 3} on a directed 4-cycle: RN+(S) = S, so A = S outweighs C = {4, 5}
        arcs = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 2)]
        g = OrientedGraph.from_arcs(6, arcs)
        from adhc_lab.structure.expander import ExpanderReport, robust_out_neighborhood

        params = ExpanderParams(Fraction(1, 6), Fraction(1, 6))
        s = VertexSet.of(6, [0, 1, 2, 3])
        rep = ExpanderReport(False, params, s, robust_out_neighborhood(g, s, params.nu))
        dp = derive_nice_partition(g, rep)
        assert dp.reversed
        assert dp.graph == g.reverse()
        assert len(dp.partition.a) <= len(dp.partition.c)

    def test_rejects_non_witness(self):
        g = OrientedGraph.empty(6)
        rep = is_robust_outexpander(g, ExpanderParams(0.1, 0.1))
        from dataclasses import replace

        with pytest.raises(ValueError):
            derive_nice_partition(g, replace(rep, verdict=True))
        with pytest.raises(ValueError):
            derive_nice_partition(g, replace(rep, witness=VertexSet.full(6)))


class TestNice:
    @pytest.mark.parametrize("family, s", [("A", 1), ("B", 4), ("C", 3)])
    def test_families_are_nice(self, family, s):
        inst = generate_extremal(ExtremalSpec(family, s))
        rep = check_nice_partition(inst.graph, inst.partition, Fraction(1, 4))
        assert rep.nice

    def test_np3_counts_cross_arcs(self):
        g = OrientedGraph.from_arcs(4, [(0, 2), (3, 3 - 1)])
        p = Partition4.from_lists(4, [0], [1], [2], [3])
        rep = check_nice_partition(g, p, Fraction(1, 2))
        assert rep.cross_arcs == 2
        assert rep.np3
        assert not check_nice_partition(g, p, Fraction(1, 4)).np3

    def test_np1_requires_a_le_c(self):
        g = OrientedGraph.empty(4)
        p = Partition4.from_lists(4, [0, 1], [], [2], [3])
        assert not check_nice_partition(g, p, Fraction(1, 2)).np1

    def test_size_mismatch(self):
        with pytest.raises(PartitionError):
            check_nice_partition(OrientedGraph.empty(5), Partition4.from_lists(4, [0], [1], [2], [3]), 0.1)


class TestGoodBad:
    @settings(max_examples=150)
    @given(graph_with_partition(), st.sampled_from([Fraction(0), Fraction(1, 20), Fraction(1, 5)]))
    def test_matches_reference(self, gp, delta):
        g, parts = gp
        p = Partition4.from_lists(g.n, *parts)
        labels = classify_good_bad(g, p, delta)
        for v in range(g.n):
            assert labels.is_good(v) == good_reference(g, parts, v, delta * g.n)
        assert labels.good | labels.bad == g.vertices

    @pytest.mark.parametrize("family, s", [("A", 1), ("B", 3), ("C", 2)])
    def test_family_vertices_are_good(self, family, s):
        inst = generate_extremal(ExtremalSpec(family, s))
        labels = classify_good_bad(inst.graph, inst.partition, Fraction(1, 4))
        assert not labels.bad

    @settings(max_examples=60)
    @given(graph_with_partition())
    def test_monotone_in_delta(self, gp):
        g, parts = gp
        p = Partition4.from_lists(g.n, *parts)
        small = classify_good_bad(g, p, Fraction(1, 20)).good
        large = classify_good_bad(g, p, Fraction(1, 5)).good
        assert small.issubset(large)


class TestSpecialArcs:
    @settings(max_examples=150)
    @given(graph_with_partition())
    def test_matches_definition(self, gp):
        g, parts = gp
        p = Partition4.from_lists(g.n, *parts)
        A, B, C, D = (set(x) for x in parts)
        expected = sorted((u, v) for u, v in g.arcs()
                          if (u in A | D and v in C | D) or (u in B | C and v in A | B))
        assert find_special_arcs(g, p) == expected
        assert all(is_special(p, u, v) for u, v in expected)

    @settings(max_examples=150)
    @given(graph_with_partition())
    def test_disjoint_pair(self, gp):
        g, parts = gp
        p = Partition4.from_lists(g.n, *parts)
        arcs = find_special_arcs(g, p)
        pair = find_two_disjoint_special_arcs(g, p)
        exists = any(not {a, b} & {c, d} for i, (a, b) in enumerate(arcs) for c, d in arcs[i + 1:])
        assert (pair is not None) == exists
        if pair:
            (a, b), (c, d) = pair
            assert not {a, b} & {c, d}

    def test_family_b_special_arcs_share_a_vertex(self):
        inst = generate_extremal(ExtremalSpec("B", 4))
        arcs = find_special_arcs(inst.graph, inst.partition)
        assert len(arcs) == 2
        assert find_two_disjoint_special_arcs(inst.graph, inst.partition) is None

    @pytest.mark.parametrize("family, s", [("A", 1), ("C", 3)])
    def test_families_a_c_have_none(self, family, s):
        inst = generate_extremal(ExtremalSpec(family, s))
        assert find_special_arcs(inst.graph, inst.partition) == []


class TestReassign:
    def test_acceptable(self):
        g = OrientedGraph.from_arcs(5, [(0, 4), (1, 4), (4, 2)])
        assert acceptable(g, 4, [0, 1], [2], Fraction(1, 5))
        assert not acceptable(g, 4, [0, 1], [2], Fraction(2, 5))
        assert not acceptable(g, 4, [3], [2], Fraction(1, 5))

    @settings(max_examples=150)
    @given(graph_with_partition(min_n=5, max_n=12), st.sampled_from([Fraction(1, 20), Fraction(1, 10)]))
    def test_first_match_rule(self, gp, frac):
        g, parts = gp
        p = Partition4.from_lists(g.n, *parts)
        labels = classify_good_bad(g, p, Fraction(1, 20))
        A, B, C, D = p.a, p.b, p.c, p.d
        rules = [("A", A | D, A | B), ("B", A | D, C | D), ("C", B | C, C | D), ("D", B | C, A | B)]
        wanted = {}
        for v in labels.bad:
            hits = [name for name, u1, u2 in rules if acceptable(g, v, u1, u2, frac)]
            wanted[v] = hits[0] if hits else None
        if any(h is None for h in wanted.values()):
            with pytest.raises(UnassignableVertex):
                reassign_by_acceptability(g, p, labels, frac)
            return
        q = reassign_by_acceptability(g, p, labels, frac)
        for v in range(g.n):
            assert q.part_of(v) == (wanted[v] if v in wanted else p.part_of(v))

    def test_unassignable_isolated_vertex(self):
        g = OrientedGraph.from_arcs(4, [(0, 1)])
        p = Partition4.from_lists(4, [], [0], [1], [2, 3])
        labels = GoodBadLabels(VertexSet.of(4, [0, 1, 2]), Fraction(0))
        with pytest.raises(UnassignableVertex) as err:
            reassign_by_acceptability(g, p, labels)
        assert err.value.vertex == 3
