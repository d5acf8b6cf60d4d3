"""Partition-level structure: nice partitions, good/bad vertices, special arcs,
acceptability and bad-vertex reassignment."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph import OrientedGraph, VertexSet, bits_of, exact, iter_bits
from ..partition import Partition4, PartitionError
from .expander import ExpanderReport, robust_out_neighborhood, size_window

__all__ = [
    "DerivedPartition",
    "NiceReport",
    "GoodBadLabels",
    "UnassignableVertex",
    "derive_nice_partition",
    "check_nice_partition",
    "classify_good_bad",
    "find_special_arcs",
    "find_two_disjoint_special_arcs",
    "is_special",
    "acceptable",
    "reassign_by_acceptability",
]


def _require_fits(g: OrientedGraph, p: Partition4) -> None:
    if p.n != g.n:
        raise PartitionError(f"partition over {p.n} vertices used with graph on {g.n}")


@dataclass(frozen=True)
class DerivedPartition:
    """Partition read off a non-expansion witness.

    When ``reversed`` is set, ``partition`` refers to ``graph``, which is the
    input with every arc reversed (and A, C relabeled accordingly).
    """

    partition: Partition4
    reversed: bool
    graph: OrientedGraph


def derive_nice_partition(g: OrientedGraph, report: ExpanderReport, nu=None) -> DerivedPartition:
    """A = RN+ ∩ S, B = RN+ \\ S, C = rest, D = S \\ RN+, normalised to |A| <= |C|."""
    if report.verdict or report.witness is None:
        raise ValueError("need a failed expansion report with a witness set")
    nu = report.params.nu if nu is None else exact(nu)
    n = g.n
    s = report.witness
    rn = robust_out_neighborhood(g, s, nu)
    lo, hi = size_window(n, report.params.tau)
    if not (lo <= len(s) <= hi and len(rn) < len(s) + nu * n):
        raise ValueError("witness does not violate robust outexpansion")
    a, b = rn & s, rn - s
    c, d = (rn | s).complement(), s - rn
    part = Partition4(a, b, c, d)
    if len(a) > len(c):
        return DerivedPartition(part.swap_ac(), True, g.reverse())
    return DerivedPartition(part, False, g)


@dataclass(frozen=True)
class NiceReport:
    np1: bool
    np2: bool
    np3: bool
    cross_arcs: int

    @property
    def nice(self) -> bool:
        return self.np1 and self.np2 and self.np3


def check_nice_partition(g: OrientedGraph, p: Partition4, epsilon, big_o_constant=1) -> NiceReport:
    """NP1-NP3 with every hidden O(eps*n) slack set to ``big_o_constant * eps * n``."""
    _require_fits(g, p)
    eps, k = exact(epsilon), exact(big_o_constant)
    n = g.n
    na, nb, nc, nd = p.sizes()
    slack = k * eps * n
    quarter = Fraction(n, 4)
    np1 = na <= nc and abs(na + nc - Fraction(n, 2)) <= slack
    np2 = abs(nb - quarter) <= slack and abs(nd - quarter) <= slack
    cross = g.arcs_between(p.a | p.d, p.c | p.d)
    np3 = cross <= eps * eps * n * n
    return NiceReport(np1, np2, np3, cross)


@dataclass(frozen=True)
class GoodBadLabels:
    good: VertexSet
    delta: Fraction

    def is_good(self, v: int) -> bool:
        return v in self.good

    @property
    def bad(self) -> VertexSet:
        return self.good.complement()


def _good_conditions(g: OrientedGraph, p: Partition4, v: int, slack: Fraction) -> bool:
    A, B, C, D = p.a, p.b, p.c, p.d
    out_deg, in_deg = g.out_degree, g.in_degree
    if v in A:
        half = Fraction(len(A), 2) - slack
        return (
            out_deg(v, A) >= half
            and in_deg(v, A) >= half
            and out_deg(v, B) >= len(B) - slack
            and in_deg(v, D) >= len(D) - slack
        )
    if v in B:
        return out_deg(v, C) >= len(C) - slack and in_deg(v, A) >= len(A) - slack
    if v in C:
        half = Fraction(len(C), 2) - slack
        return (
            out_deg(v, C) >= half
            and in_deg(v, C) >= half
            and out_deg(v, D) >= len(D) - slack
            and in_deg(v, B) >= len(B) - slack
        )
    return (
        out_deg(v, B) >= Fraction(len(C), 2) - slack
        and in_deg(v, B) >= Fraction(len(A), 2) - slack
        and out_deg(v, A) >= len(A) - slack
        and in_deg(v, C) >= len(C) - slack
    )


def classify_good_bad(g: OrientedGraph, p: Partition4, delta) -> GoodBadLabels:
    """Label each vertex delta-good or delta-bad; ties count as good."""
    _require_fits(g, p)
    delta = exact(delta)
    slack = delta * g.n
    good = 0
    for v in range(g.n):
        if _good_conditions(g, p, v, slack):
            good |= 1 << v
    return GoodBadLabels(VertexSet(good, g.n), delta)


def is_special(p: Partition4, u: int, v: int) -> bool:
    ad, cd = p.a | p.d, p.c | p.d
    bc, ab = p.b | p.c, p.a | p.b
    return (u in ad and v in cd) or (u in bc and v in ab)


def find_special_arcs(g: OrientedGraph, p: Partition4) -> list[tuple[int, int]]:
    """Arcs in E(A∪D, C∪D) ∪ E(B∪C, A∪B), sorted."""
    _require_fits(g, p)
    first = g.arc_list_between(p.a | p.d, p.c | p.d)
    second = g.arc_list_between(p.b | p.c, p.a | p.b)
    # tails lie in A∪D and B∪C respectively, so the classes cannot overlap
    assert not set(first) & set(second)
    return sorted(first + second)


def find_two_disjoint_special_arcs(g: OrientedGraph, p: Partition4):
    """First vertex-disjoint pair of special arcs in lexicographic order, or None."""
    arcs = find_special_arcs(g, p)
    for i, (u1, v1) in enumerate(arcs):
        for u2, v2 in arcs[i + 1:]:
            if not {u1, v1} & {u2, v2}:
                return (u1, v1), (u2, v2)
    return None


def acceptable(g: OrientedGraph, v: int, u1, u2, threshold_fraction=Fraction(1, 100)) -> bool:
    """d-(v, U1) >= fraction*n and d+(v, U2) >= fraction*n."""
    t = exact(threshold_fraction) * g.n
    return g.in_degree(v, bits_of(u1, g.n)) >= t and g.out_degree(v, bits_of(u2, g.n)) >= t


class UnassignableVertex(ValueError):
    def __init__(self, v: int):
        super().__init__(f"bad vertex {v} is acceptable for none of the four targets")
        self.vertex = v


def reassign_by_acceptability(
    g: OrientedGraph, p: Partition4, labels: GoodBadLabels, threshold_fraction=Fraction(1, 100)
) -> Partition4:
    """Move every bad vertex to the first part (A, B, C, D order) it is acceptable for.

    Acceptability is judged against the input partition, so the result does
    not depend on the order in which bad vertices are visited.
    """
    _require_fits(g, p)
    A, B, C, D = p.a, p.b, p.c, p.d
    rules = (
        ("a", A | D, A | B),
        ("b", A | D, C | D),
        ("c", B | C, C | D),
        ("d", B | C, A | B),
    )
    target = {k: getattr(p, k).bits for k in "abcd"}
    for v in iter_bits(labels.bad.bits):
        for name, u1, u2 in rules:
            if acceptable(g, v, u1, u2, threshold_fraction):
                for k in "abcd":
                    target[k] &= ~(1 << v)
                target[name] |= 1 << v
                break
        else:
            raise UnassignableVertex(v)
    return Partition4(*(VertexSet(target[k], g.n) for k in "abcd"))
