"""Graph constructions: the three sharpness families, their building blocks,
and seeded random oriented graphs.

Family parts are laid out contiguously as A, B, C, D in id order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .graph import OrientedGraph, VertexSet
from .partition import Partition4
from .rng import stream

__all__ = [
    "ExtremalSpec",
    "ExtremalInstance",
    "RandomModel",
    "generate_extremal",
    "almost_regular_tournament",
    "almost_regular_bipartite_tournament",
    "random_oriented",
    "labeled_oriented_graphs",
]


@dataclass(frozen=True)
class ExtremalSpec:
    """One sharpness construction: ``family`` in A/B/C and scale ``s >= 1``."""

    family: str
    s: int

    def __post_init__(self) -> None:
        fam = self.family.upper()
        if fam not in ("A", "B", "C"):
            raise ValueError(f"family must be A, B or C, got {self.family!r}")
        object.__setattr__(self, "family", fam)
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"scale s must be a positive integer, got {self.s!r}")

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        """(|A|, |B|, |C|, |D|) per the family's size table."""
        s = self.s
        if self.family == "A":
            return 2 * s + 1, 2 * s + 2, 2 * s + 1, 2 * s + 2
        if self.family == "B":
            return 1, s, 2 * s - 1, s
        return 0, s + 1, 2 * s, s + 1

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def expected_sigma(self) -> int:
        s = self.s
        return {"A": 6 * s + 4, "B": 3 * s, "C": 3 * s + 1}[self.family]

    @property
    def degenerate(self) -> bool:
        # family B at s = 1 has a single C vertex, so the A vertex cannot
        # have distinct in- and out-neighbours there
        return self.family == "B" and self.s == 1


@dataclass(frozen=True)
class ExtremalInstance:
    spec: ExtremalSpec
    graph: OrientedGraph
    partition: Partition4

    @property
    def degenerate(self) -> bool:
        return self.spec.degenerate


def almost_regular_tournament(m: int) -> OrientedGraph:
    """Rotational tournament on ``m`` vertices with |d+(v) - d-(v)| <= 1."""
    if m < 1:
        raise ValueError("tournament needs at least one vertex")
    arcs = []
    half = (m - 1) // 2
    for i in range(m):
        for j in range(1, half + 1):
            arcs.append((i, (i + j) % m))
    if m % 2 == 0:
        for i in range(m // 2):
            arcs.append((i, i + m // 2))
    return OrientedGraph.from_arcs(m, arcs)


def almost_regular_bipartite_tournament(b, d) -> list[tuple[int, int]]:
    """Checkerboard orientation between ``b`` and ``d``: ``b_i -> d_j`` iff i + j is even.

    ``b`` and ``d`` are vertex sets (or id sequences) of equal even size;
    members are indexed in increasing id order.
    """
    bs = sorted(b)
    ds = sorted(d)
    if set(bs) & set(ds):
        raise ValueError("the two sides must be disjoint")
    if len(bs) != len(ds) or len(bs) % 2:
        raise ValueError(f"sides must have equal even size, got {len(bs)} and {len(ds)}")
    arcs = []
    for i, u in enumerate(bs):
        for j, v in enumerate(ds):
            arcs.append((u, v) if (i + j) % 2 == 0 else (v, u))
    return arcs


def _tournament_on(ids: Sequence[int]) -> list[tuple[int, int]]:
    t = almost_regular_tournament(len(ids)) if ids else None
    return [(ids[u], ids[v]) for u, v in t.arcs()] if t else []


def _complete(x: Sequence[int], y: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in x for v in y]


def generate_extremal(spec: ExtremalSpec, seed: int | None = None) -> ExtremalInstance:
    """Build the sharpness graph for ``spec`` together with its partition.

    With ``seed`` given, vertex ids are shuffled inside each part, which
    yields a different labeled member of the family with the same partition.
    """
    na, nb, nc, nd = spec.sizes
    n = na + nb + nc + nd
    A = list(range(0, na))
    B = list(range(na, na + nb))
    C = list(range(na + nb, na + nb + nc))
    D = list(range(na + nb + nc, n))

    arcs: list[tuple[int, int]] = []
    if spec.family == "A":
        arcs += _tournament_on(A) + _tournament_on(C)
        arcs += _complete(A, B) + _complete(B, C) + _complete(C, D) + _complete(D, A)
        arcs += almost_regular_bipartite_tournament(B, D)
    elif spec.family == "B":
        (a,) = A
        arcs += _tournament_on(C)
        arcs += _complete(D, A) + _complete(A, B) + _complete(B, C) + _complete(C, D) + _complete(D, B)
        arcs.append((C[0], a))
        if len(C) > 1:
            arcs.append((a, C[1]))
    else:
        arcs += _tournament_on(C)
        arcs += _complete(B, C) + _complete(C, D) + _complete(D, B)

    g = OrientedGraph.from_arcs(n, arcs)
    if seed is not None:
        rng = stream(seed)
        perm = list(range(n))
        for part in (A, B, C, D):
            shuffled = [part[i] for i in rng.permutation(len(part))]
            for old, new in zip(part, shuffled):
                perm[old] = new
        g = g.relabel(perm)
    part = Partition4.from_lists(n, A, B, C, D)
    return ExtremalInstance(spec, g, part)


@dataclass(frozen=True)
class RandomModel:
    """Each unordered pair gets an arc with probability ``arc_probability``;
    its direction is a fair coin."""

    n: int
    arc_probability: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.arc_probability <= 1.0:
            raise ValueError("arc_probability must lie in [0, 1]")


def random_oriented(model: RandomModel) -> OrientedGraph:
    n = model.n
    iu, ju = np.triu_indices(n, k=1)
    rng = stream(model.seed)
    present = rng.random(len(iu)) < model.arc_probability
    flip = rng.random(len(iu)) < 0.5
    out = [0] * n
    for i, j, keep, f in zip(iu.tolist(), ju.tolist(), present.tolist(), flip.tolist()):
        if keep:
            u, v = (j, i) if f else (i, j)
            out[u] |= 1 << v
    return OrientedGraph.from_out_rows(out)


def labeled_oriented_graphs(n: int) -> Iterator[OrientedGraph]:
    """Every labeled oriented graph on ``n`` vertices (3 ** C(n, 2) of them).

    Pairs are visited in lexicographic order; per pair the choices are
    none, i -> j, j -> i.
    """
    if n > 5:
        raise ValueError("labeled enumeration is limited to n <= 5")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for choice in product(range(3), repeat=len(pairs)):
        out = [0] * n
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                out[i] |= 1 << j
            elif c == 2:
                out[j] |= 1 << i
        yield OrientedGraph.from_out_rows(out)
