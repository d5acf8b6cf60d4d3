"""Validators and samplers: L1-L4 for the
long path, CP1-CP3 for the split of the leftover C, balanced random subsets,
degree outliers, and the Ore-to-semidegree implication."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ..graph import AntidirectedWalk, OrientedGraph, VertexSet, bits_of, degree_profile, exact, iter_bits
from ..partition import Partition4
from ..rng import stream
from .partition import GoodBadLabels

__all__ = [
    "LReport",
    "CPReport",
    "Side",
    "OutlierReport",
    "BalanceUnreachable",
    "check_L_conditions",
    "check_CP_conditions",
    "balanced_random_subset",
    "balance_deviation",
    "degree_outlier_report",
    "semidegree_implication",
]


@dataclass(frozen=True)
class LReport:
    l1: bool
    l2: bool
    l3: bool
    l4: bool

    def as_dict(self) -> dict:
        return {"l1": self.l1, "l2": self.l2, "l3": self.l3, "l4": self.l4}


def check_L_conditions(
    g: OrientedGraph,
    p: Partition4,
    labels: GoodBadLabels,
    path: AntidirectedWalk,
    delta,
    big_o_constant=1,
    auxiliary: Iterable = (),
) -> LReport:
    """Evaluate L1-L4 for ``path`` against partition ``p``.

    ``auxiliary`` lists further vertex sets (the two proper paths, say) that
    L1 requires the path to cover along with A.
    """
    n = g.n
    on = bits_of(path.vertices)
    must = p.a.bits | labels.bad.bits
    for extra in auxiliary:
        must |= bits_of(extra, n)
    l1 = must & ~on == 0

    vs = path.vertices
    if vs and not path.closed:
        ends = {vs[0], vs[-1]}
        l2 = all(e in p.d and labels.is_good(e) and path.is_sink(e) for e in ends)
    else:
        l2 = False

    def off(part: VertexSet) -> int:
        return (part.bits & ~on).bit_count()

    l3 = off(p.c) > off(p.b) + off(p.d) + Fraction(n, 300)
    l4 = (p.c.bits & on).bit_count() <= exact(big_o_constant) * exact(delta) * n
    return LReport(l1, l2, l3, l4)


@dataclass(frozen=True)
class CPReport:
    cp1: bool
    cp2: bool
    cp3: bool
    c1_target: int
    max_deviation: Fraction


def check_CP_conditions(
    g: OrientedGraph,
    c_rest,
    c1,
    c2,
    b_rest: int,
    d_rest: int,
    delta,
    epsilon,
) -> CPReport:
    """CP1-CP3 for a split of C \\ V(P) into ``c1`` and ``c2``.

    ``b_rest`` and ``d_rest`` are |B \\ V(P)| and |D \\ V(P)|. CP1 rounds
    2*sqrt(delta)*n to the nearest integer (halves round up).
    """
    n = g.n
    rest, one, two = bits_of(c_rest, n), bits_of(c1, n), bits_of(c2, n)
    if one & two or one | two != rest:
        raise ValueError("c1 and c2 must partition c_rest")
    target = b_rest + d_rest + math.floor(2 * math.sqrt(float(exact(delta))) * n + 0.5)
    cp1 = one.bit_count() == target
    cp2 = two.bit_count() >= Fraction(n, 400)
    dev = balance_deviation(g, rest, one)
    cp3 = dev <= exact(epsilon) * n
    return CPReport(cp1, cp2, cp3, target, dev)


def balance_deviation(g: OrientedGraph, s, t) -> Fraction:
    """Largest |d±(v, T) - K d±(v, S)| and |d±(v, S\\T) - (1-K) d±(v, S)| over all v,
    with K = |T| / |S| (taken as 0 for empty S)."""
    sbits, tbits = bits_of(s, g.n), bits_of(t, g.n)
    rbits = sbits & ~tbits
    size = sbits.bit_count()
    k = Fraction(tbits.bit_count(), size) if size else Fraction(0)
    worst = Fraction(0)
    for v in range(g.n):
        for row in (g.out_adj[v], g.in_adj[v]):
            whole = (row & sbits).bit_count()
            worst = max(
                worst,
                abs((row & tbits).bit_count() - k * whole),
                abs((row & rbits).bit_count() - (1 - k) * whole),
            )
    return worst


class BalanceUnreachable(RuntimeError):
    def __init__(self, best: Fraction, tries: int):
        super().__init__(f"no balanced subset after {tries} tries (best deviation {float(best):.3f})")
        self.best = best


def balanced_random_subset(g: OrientedGraph, s, m: int, epsilon, seed: int = 0, max_retries: int = 1000) -> VertexSet:
    """Uniform m-subset T of ``s`` whose degrees into T and S\\T track the
    proportional share within eps*n for every vertex; resampled until it does."""
    sbits = bits_of(s, g.n)
    members = np.array(list(iter_bits(sbits)), dtype=np.int64)
    if not 0 <= m <= len(members):
        raise ValueError("need 0 <= m <= |s|")
    limit = exact(epsilon) * g.n
    rng = stream(seed)
    best = None
    for _ in range(max_retries):
        pick = rng.choice(members, size=m, replace=False) if m else members[:0]
        tbits = bits_of(pick.tolist())
        dev = balance_deviation(g, sbits, tbits)
        if dev <= limit:
            return VertexSet(tbits, g.n)
        best = dev if best is None else min(best, dev)
    raise BalanceUnreachable(best, max_retries)


class Side(str, enum.Enum):
    DENSE = "dense"
    SPARSE = "sparse"


@dataclass(frozen=True)
class OutlierReport:
    side: Side
    x_outliers: VertexSet
    y_outliers: VertexSet
    arcs: int
    x_size: int
    y_size: int
    threshold: float

    def implication_holds(self, epsilon, big_o_constant=1) -> bool:
        """If e(X, Y) meets the density premise, both outlier sets have size <= eps^(1/3) n."""
        eps, k = float(exact(epsilon)), float(exact(big_o_constant))
        n = self.x_outliers.universe_n
        if self.side is Side.DENSE:
            premise = self.arcs >= self.x_size * self.y_size - k * eps * n * n
        else:
            premise = self.arcs <= k * eps * n * n
        if not premise:
            return True
        cap = eps ** (1 / 3) * n
        return len(self.x_outliers) <= cap and len(self.y_outliers) <= cap


def degree_outlier_report(g: OrientedGraph, x, y, epsilon, side: Side | str = Side.DENSE) -> OutlierReport:
    """Vertices of X (resp. Y) whose degree towards Y (resp. from X) is
    sqrt(eps)*n away from complete (DENSE) or from empty (SPARSE)."""
    side = Side(side)
    n = g.n
    xb, yb = bits_of(x, n), bits_of(y, n)
    if xb & yb:
        raise ValueError("x and y must be disjoint")
    root = math.sqrt(float(exact(epsilon))) * n
    nx, ny = xb.bit_count(), yb.bit_count()
    xo = yo = 0
    for v in iter_bits(xb):
        d = (g.out_adj[v] & yb).bit_count()
        if (d <= ny - root) if side is Side.DENSE else (d >= root):
            xo |= 1 << v
    for v in iter_bits(yb):
        d = (g.in_adj[v] & xb).bit_count()
        if (d <= nx - root) if side is Side.DENSE else (d >= root):
            yo |= 1 << v
    return OutlierReport(side, VertexSet(xo, n), VertexSet(yo, n), g.arcs_between(xb, yb), nx, ny, root)


def semidegree_implication(g: OrientedGraph, gammas: Sequence) -> list[tuple[Fraction, bool, bool]]:
    """For each gamma: (gamma, sigma+- >= (n + 3 gamma n)/2, delta0 >= gamma n).

    The implication hypothesis -> conclusion holds for every oriented graph;
    a row with True, False is a counterexample.
    """
    prof = degree_profile(g)
    n = g.n
    rows = []
    for gamma in gammas:
        gm = exact(gamma)
        hyp = prof.sigma_pm >= (n + 3 * gm * n) / 2
        con = prof.delta0 >= gm * n
        rows.append((gm, bool(hyp), bool(con)))
    return rows
