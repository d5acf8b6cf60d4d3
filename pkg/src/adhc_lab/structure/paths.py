"""Short and long antidirected paths built on top of a partition:
D-proper paths through a special arc, and the long B-D path."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from ..graph import AntidirectedWalk, OrientedGraph, Step, VertexSet, bits_of, iter_bits, validate_antidirected
from ..partition import Partition4
from .partition import GoodBadLabels, is_special

__all__ = [
    "ProperPath",
    "PathCheck",
    "ExtensionFailed",
    "TargetUnreachable",
    "check_proper_path",
    "extend_to_proper_path",
    "min_degree_subgraph",
    "build_bd_path",
    "check_bd_path",
]

MAX_PROPER_ORDER = 10
MAX_AVOID = 20


class ExtensionFailed(RuntimeError):
    def __init__(self, choice_point: str):
        super().__init__(f"no candidate at {choice_point}")
        self.choice_point = choice_point


class TargetUnreachable(RuntimeError):
    pass


@dataclass(frozen=True)
class PathCheck:
    ok: bool
    code: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ProperPath:
    walk: AntidirectedWalk

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.walk.vertices

    @property
    def order(self) -> int:
        return len(self.walk.vertices)


def check_proper_path(g: OrientedGraph, p: Partition4, labels: GoodBadLabels, walk: AntidirectedWalk) -> PathCheck:
    """D-proper: antidirected, even order <= 10, first and last arcs forward,
    both ends delta-good members of D."""
    base = validate_antidirected(g, walk)
    if walk.closed or not base:
        return PathCheck(False, "P1", base.detail or "closed walk")
    order = len(walk.vertices)
    if order < 2 or order > MAX_PROPER_ORDER or order % 2:
        return PathCheck(False, "P1", f"order {order}")
    if walk.directions[0] is not Step.FWD or walk.directions[-1] is not Step.FWD:
        return PathCheck(False, "P2", "first and last arcs must point forward")
    for end in (walk.vertices[0], walk.vertices[-1]):
        if end not in p.d or not labels.is_good(end):
            return PathCheck(False, "P3", f"end {end} is not a good vertex of D")
    return PathCheck(True)


class _Grower:
    """Depth-first growth of one side of a path away from an anchor vertex."""

    def __init__(self, g: OrientedGraph, good: int, avoid: int, budget: int):
        self.g = g
        self.good = good
        self.avoid = avoid
        self.budget = budget
        self.first_empty: str | None = None

    def grow(self, anchor: int, first_out: bool, parts: list[tuple[str, int]], used: int, tag: str) -> Iterator[list[int]]:
        def rec(prev: int, i: int, used: int, out: bool) -> Iterator[list[int]]:
            if i == len(parts):
                yield []
                return
            label, part = parts[i]
            nbrs = self.g.out_adj[prev] if out else self.g.in_adj[prev]
            cands = nbrs & part & self.good & ~used & ~self.avoid
            if not cands and self.first_empty is None:
                self.first_empty = f"{tag}[{i}] ({label}, {'out' if out else 'in'}-neighbour of {prev})"
            for c in iter_bits(cands):
                self.budget -= 1
                if self.budget < 0:
                    raise ExtensionFailed("search budget exhausted")
                for rest in rec(c, i + 1, used | 1 << c, not out):
                    yield [c] + rest

        return rec(anchor, 0, used, first_out)


def extend_to_proper_path(
    g: OrientedGraph,
    p: Partition4,
    labels: GoodBadLabels,
    arc: tuple[int, int],
    w: Iterable[int] | VertexSet = (),
    *,
    budget: int = 200_000,
) -> ProperPath:
    """Grow the special arc ``u -> v`` into a D-proper path avoiding ``w``.

    For arcs in E(B∪C, A∪B) the path has form D A (A∪D) v u (C∪D) C D, or
    D v u (C∪D) C D when |A| < n/200. Arcs in E(A∪D, C∪D) are traversed
    forward instead: the tail side leaves through A (D A, or D A A B) and the
    head side through C (C D, or B C C D); an endpoint of the arc that is
    itself a good D-vertex may end the path directly. Candidates are tried in
    increasing id order; every added vertex is delta-good.
    """
    u, v = arc
    wbits = bits_of(w, g.n)
    if wbits.bit_count() > MAX_AVOID:
        raise ValueError(f"avoid set larger than {MAX_AVOID}")
    if wbits >> u & 1 or wbits >> v & 1:
        raise ValueError("arc endpoints must not lie in the avoid set")
    if not g.has_arc(u, v):
        raise ValueError(f"{u}->{v} is not an arc")
    if not is_special(p, u, v):
        raise ValueError(f"{u}->{v} is not special for the partition")

    A, B, C, D = p.a.bits, p.b.bits, p.c.bits, p.d.bits
    n = g.n
    good = labels.good.bits

    def good_d(x: int) -> bool:
        return bool(D >> x & 1 and good >> x & 1)

    if (B | C) >> u & 1:
        tail_opts = [[("C∪D", C | D), ("C", C), ("D", D)]]
        if len(p.a) >= Fraction(n, 200):
            head_opts = [[("A∪D", A | D), ("A", A), ("D", D)]]
        else:
            head_opts = [[("D", D)]]
    else:
        tail_opts = ([[]] if good_d(u) else []) + [[("A", A), ("D", D)], [("B", B), ("A", A), ("A", A), ("D", D)]]
        head_opts = ([[]] if good_d(v) else []) + [[("C", C), ("D", D)], [("B", B), ("C", C), ("C", C), ("D", D)]]

    combos = [
        (t, h)
        for t in tail_opts
        for h in head_opts
        if len(t) % 2 == len(h) % 2 and len(t) + len(h) + 2 <= MAX_PROPER_ORDER
    ]
    combos.sort(key=lambda th: len(th[0]) + len(th[1]))

    grower = _Grower(g, good, wbits, budget)
    base_used = 1 << u | 1 << v
    for tail_parts, head_parts in combos:
        # tail vertex u is a source of the path, head vertex v a sink
        for tail in grower.grow(u, True, tail_parts, base_used, "tail"):
            used = base_used | bits_of(tail)
            head = next(grower.grow(v, False, head_parts, used, "head"), None)
            if head is None:
                continue
            if len(tail) % 2 == 0:
                order = list(reversed(tail)) + [u, v] + head
            else:
                order = list(reversed(head)) + [v, u] + tail
            walk = AntidirectedWalk.from_vertices(g, order)
            check = check_proper_path(g, p, labels, walk)
            assert check, f"extension produced an improper path: {check}"
            return ProperPath(walk)
    raise ExtensionFailed(grower.first_empty or "no template applies")


def min_degree_subgraph(vertices: VertexSet, edges: Iterable[tuple[int, int]]) -> VertexSet:
    """Peel vertices of degree below e/|V| (fixed on the input) until none remain."""
    vbits = vertices.bits
    adj: dict[int, int] = {x: 0 for x in iter_bits(vbits)}
    count = 0
    for a, b in edges:
        if a == b or not (vbits >> a & 1 and vbits >> b & 1):
            raise ValueError(f"edge {a}-{b} not over the vertex set")
        if not adj[a] >> b & 1:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            count += 1
    if not adj:
        return vertices
    target = Fraction(count, len(adj))
    alive = vbits
    changed = True
    while changed:
        changed = False
        for x in iter_bits(alive):
            if (adj[x] & alive).bit_count() < target:
                alive &= ~(1 << x)
                changed = True
                break
    return VertexSet(alive, vertices.universe_n)


def check_bd_path(g: OrientedGraph, p: Partition4, labels: GoodBadLabels, walk: AntidirectedWalk) -> PathCheck:
    base = validate_antidirected(g, walk)
    if walk.closed or not base:
        return PathCheck(False, "antidirected", base.detail or "closed walk")
    vs = walk.vertices
    if len(vs) % 2 == 0:
        return PathCheck(False, "order", f"even order {len(vs)}")
    for i, x in enumerate(vs):
        part = p.d if i % 2 == 0 else p.b
        if x not in part:
            return PathCheck(False, "form", f"position {i} vertex {x} outside {'D' if i % 2 == 0 else 'B'}")
        if not labels.is_good(x):
            return PathCheck(False, "good", f"vertex {x} is bad")
    if any(walk.is_sink(x) for x in vs[0::2]) and len(vs) > 1:
        return PathCheck(False, "orientation", "D vertices must be sources")
    return PathCheck(True)


def build_bd_path(
    g: OrientedGraph,
    p: Partition4,
    labels: GoodBadLabels,
    target_order: int,
    *,
    budget: int = 1_000_000,
) -> AntidirectedWalk:
    """Path D B D ... D of good vertices using arcs D -> B, of exactly the
    target order (rounded up to odd).

    The search first runs inside the min-degree core of the bipartite graph
    on (B, D) with edge set E(D, B) and falls back to the whole graph.
    """
    if target_order < 1:
        raise ValueError("target order must be positive")
    t = target_order if target_order % 2 else target_order + 1
    good = labels.good.bits
    Dg, Bg = p.d.bits & good, p.b.bits & good
    need_d, need_b = (t + 1) // 2, (t - 1) // 2
    if Dg.bit_count() < need_d or Bg.bit_count() < need_b:
        raise TargetUnreachable(f"order {t} needs {need_d} good D and {need_b} good B vertices")

    edges = g.arc_list_between(p.d, p.b)
    core = min_degree_subgraph(p.b | p.d, edges).bits
    budget_left = [budget]

    def search(allowed: int) -> list[int] | None:
        def rec(path: list[int], used: int) -> list[int] | None:
            if len(path) == t:
                return path
            last = path[-1]
            if len(path) % 2 == 1:
                cands = g.out_adj[last] & Bg & allowed & ~used
            else:
                cands = g.in_adj[last] & Dg & allowed & ~used
            for c in iter_bits(cands):
                budget_left[0] -= 1
                if budget_left[0] < 0:
                    raise TargetUnreachable("search budget exhausted")
                found = rec(path + [c], used | 1 << c)
                if found:
                    return found
            return None

        for start in iter_bits(Dg & allowed):
            found = rec([start], 1 << start)
            if found:
                return found
        return None

    order = search(core)
    if order is None and core != (p.b | p.d).bits:
        order = search((p.b | p.d).bits)
    if order is None:
        raise TargetUnreachable(f"no D-B path of order {t} among good vertices")
    dirs = tuple(Step.FWD if i % 2 == 0 else Step.BWD for i in range(t - 1))
    walk = AntidirectedWalk(tuple(order), dirs)
    check = check_bd_path(g, p, labels, walk)
    assert check, f"B-D path failed validation: {check}"
    return walk
