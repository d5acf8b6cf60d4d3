"""Oriented graphs stored as per-vertex adjacency bit rows.

Vertex ids are dense and 0-based. Every vertex set is a Python ``int`` used
as a bit vector (bit ``v`` set means vertex ``v`` is a member), optionally
wrapped in :class:`VertexSet` when the ambient vertex count matters.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "INFINITE",
    "MAX_VERTICES",
    "ArcError",
    "LoopError",
    "TwoCycleError",
    "DuplicateArcError",
    "VertexRangeError",
    "VertexSet",
    "OrientedGraph",
    "Step",
    "AntidirectedWalk",
    "WalkCheck",
    "DegreeProfile",
    "sigma_plus_minus",
    "degree_profile",
    "validate_antidirected",
    "exact",
    "bits_of",
    "iter_bits",
]

INFINITE = math.inf
MAX_VERTICES = 64


class ArcError(ValueError):
    """An arc list that does not describe an oriented graph."""


class LoopError(ArcError):
    pass


class TwoCycleError(ArcError):
    pass


class DuplicateArcError(ArcError):
    pass


class VertexRangeError(ArcError):
    pass


def exact(x: Union[int, float, Fraction, str]) -> Fraction:
    """Convert a threshold parameter to an exact rational.

    Floats go through their shortest repr, so ``0.3`` becomes ``3/10`` rather
    than the nearest binary double. Comparisons against integer counts are
    then exact, with ties resolved the way the decimal literal reads.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"threshold must be finite, got {x!r}")
        return Fraction(repr(x))
    return Fraction(x)


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(s: Union["VertexSet", int, Iterable[int], None], n: int | None = None) -> int:
    """Bit mask for ``s``; ``None`` means all of ``range(n)``."""
    if s is None:
        if n is None:
            raise ValueError("universe size needed to expand None")
        return (1 << n) - 1
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    out = 0
    for v in s:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(universe_n)`` backed by a bit mask."""

    bits: int
    universe_n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.universe_n:
            raise ValueError(
                f"bits {self.bits:#x} fall outside universe of size {self.universe_n}"
            )

    @classmethod
    def of(cls, universe_n: int, members: Iterable[int] = ()) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < universe_n:
                raise VertexRangeError(f"vertex {v} outside 0..{universe_n - 1}")
            bits |= 1 << v
        return cls(bits, universe_n)

    @classmethod
    def full(cls, universe_n: int) -> "VertexSet":
        return cls((1 << universe_n) - 1, universe_n)

    @classmethod
    def empty(cls, universe_n: int) -> "VertexSet":
        return cls(0, universe_n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def _other(self, other: Union["VertexSet", int]) -> int:
        if isinstance(other, VertexSet):
            if other.universe_n != self.universe_n:
                raise ValueError("vertex sets over different universes")
            return other.bits
        return other

    def __or__(self, other: Union["VertexSet", int]) -> "VertexSet":
        return VertexSet(self.bits | self._other(other), self.universe_n)

    def __and__(self, other: Union["VertexSet", int]) -> "VertexSet":
        return VertexSet(self.bits & self._other(other), self.universe_n)

    def __sub__(self, other: Union["VertexSet", int]) -> "VertexSet":
        return VertexSet(self.bits & ~self._other(other), self.universe_n)

    def __xor__(self, other: Union["VertexSet", int]) -> "VertexSet":
        return VertexSet(self.bits ^ self._other(other), self.universe_n)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.universe_n) - 1) & ~self.bits, self.universe_n)

    def issubset(self, other: Union["VertexSet", int]) -> bool:
        return self.bits & ~self._other(other) == 0

    def isdisjoint(self, other: Union["VertexSet", int]) -> bool:
        return self.bits & self._other(other) == 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.universe_n})"


@dataclass(frozen=True, eq=True)
class OrientedGraph:
    """Immutable oriented graph: no loops, no parallel arcs, no 2-cycles.

    ``out_adj[u]`` has bit ``v`` set iff the arc ``u -> v`` is present, and
    ``in_adj`` is the transpose. Use :meth:`from_arcs` rather than building
    rows by hand; the constructor re-checks all invariants either way.
    """

    n: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        if len(self.out_adj) != n or len(self.in_adj) != n:
            raise ValueError("adjacency rows do not match vertex count")
        limit = 1 << n
        transpose = [0] * n
        for u, row in enumerate(self.out_adj):
            if row < 0 or row >= limit:
                raise VertexRangeError(f"row {u} references vertices outside 0..{n - 1}")
            if row >> u & 1:
                raise LoopError(f"loop at vertex {u}")
            for v in iter_bits(row):
                transpose[v] |= 1 << u
        for u in range(n):
            if self.out_adj[u] & transpose[u]:
                v = (self.out_adj[u] & transpose[u]).bit_length() - 1
                raise TwoCycleError(f"2-cycle between {u} and {v}")
        if tuple(transpose) != tuple(self.in_adj):
            raise ValueError("in_adj is not the transpose of out_adj")

    @classmethod
    def from_out_rows(cls, out_rows: Sequence[int]) -> "OrientedGraph":
        n = len(out_rows)
        in_rows = [0] * n
        for u, row in enumerate(out_rows):
            for v in iter_bits(row):
                if v >= n:
                    raise VertexRangeError(f"arc {u}->{v} outside 0..{n - 1}")
                in_rows[v] |= 1 << u
        return cls(n, tuple(out_rows), tuple(in_rows))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"arc {u}->{v} outside 0..{n - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if out[u] >> v & 1:
                raise DuplicateArcError(f"duplicate arc {u}->{v}")
            if out[v] >> u & 1:
                raise TwoCycleError(f"2-cycle between {u} and {v}")
            out[u] |= 1 << v
        return cls.from_out_rows(out)

    @classmethod
    def empty(cls, n: int) -> "OrientedGraph":
        return cls(n, (0,) * n, (0,) * n)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.out_adj[u]):
                yield u, v

    @property
    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out_adj)

    def out_neighbors(self, v: int, within=None) -> VertexSet:
        return VertexSet(self.out_adj[v] & bits_of(within, self.n), self.n)

    def in_neighbors(self, v: int, within=None) -> VertexSet:
        return VertexSet(self.in_adj[v] & bits_of(within, self.n), self.n)

    def out_degree(self, v: int, within=None) -> int:
        return (self.out_adj[v] & bits_of(within, self.n)).bit_count()

    def in_degree(self, v: int, within=None) -> int:
        return (self.in_adj[v] & bits_of(within, self.n)).bit_count()

    def arcs_between(self, x, y) -> int:
        """e(X, Y): number of arcs with tail in ``x`` and head in ``y``."""
        ybits = bits_of(y, self.n)
        return sum((self.out_adj[u] & ybits).bit_count() for u in iter_bits(bits_of(x, self.n)))

    def arc_list_between(self, x, y) -> list[tuple[int, int]]:
        ybits = bits_of(y, self.n)
        return [
            (u, v)
            for u in iter_bits(bits_of(x, self.n))
            for v in iter_bits(self.out_adj[u] & ybits)
        ]

    # -- derived graphs --------------------------------------------------

    def reverse(self) -> "OrientedGraph":
        return OrientedGraph(self.n, self.in_adj, self.out_adj)

    def relabel(self, perm: Sequence[int]) -> "OrientedGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return OrientedGraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    def add_arcs(self, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        return OrientedGraph.from_arcs(self.n, list(self.arcs()) + list(arcs))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={self.arc_count})"


# -- degree statistics ----------------------------------------------------


def sigma_plus_minus(g: OrientedGraph) -> Union[int, float]:
    """Minimum of d+(x) + d-(y) over distinct x, y with no arc x -> y.

    Returns :data:`INFINITE` when no such ordered pair exists (only for n <= 1).
    """
    n = g.n
    outdeg = [row.bit_count() for row in g.out_adj]
    indeg = [row.bit_count() for row in g.in_adj]
    best = INFINITE
    for x in range(n):
        non_out = ((1 << n) - 1) & ~g.out_adj[x] & ~(1 << x)
        if not non_out:
            continue
        m = min(indeg[y] for y in iter_bits(non_out))
        if outdeg[x] + m < best:
            best = outdeg[x] + m
    return best


@dataclass(frozen=True)
class DegreeProfile:
    sigma_pm: Union[int, float]
    delta0: int
    per_vertex: tuple[tuple[int, int], ...]


def degree_profile(g: OrientedGraph) -> DegreeProfile:
    per_vertex = tuple((g.out_adj[v].bit_count(), g.in_adj[v].bit_count()) for v in range(g.n))
    delta0 = min((min(p) for p in per_vertex), default=0)
    return DegreeProfile(sigma_plus_minus(g), delta0, per_vertex)


# -- antidirected walks -----------------------------------------------------


class Step(str, enum.Enum):
    """Orientation of one walk step relative to the walk order."""

    FWD = "fwd"  # arc vertices[i] -> vertices[i+1]
    BWD = "bwd"  # arc vertices[i+1] -> vertices[i]

    def flipped(self) -> "Step":
        return Step.BWD if self is Step.FWD else Step.FWD


@dataclass(frozen=True)
class AntidirectedWalk:
    """A vertex sequence with one orientation flag per step.

    Open walks carry ``len(vertices) - 1`` steps. Closed walks carry one more,
    the wrap-around step from the last vertex back to the first.
    """

    vertices: tuple[int, ...]
    directions: tuple[Step, ...]
    closed: bool = False

    @classmethod
    def from_vertices(cls, g: OrientedGraph, vertices: Sequence[int], closed: bool = False) -> "AntidirectedWalk":
        """Read step orientations off ``g``; a missing arc raises ``ValueError``."""
        vs = tuple(vertices)
        pairs = list(zip(vs, vs[1:]))
        if closed and vs:
            pairs.append((vs[-1], vs[0]))
        dirs = []
        for a, b in pairs:
            if g.has_arc(a, b):
                dirs.append(Step.FWD)
            elif g.has_arc(b, a):
                dirs.append(Step.BWD)
            else:
                raise ValueError(f"no arc between {a} and {b}")
        return cls(vs, tuple(dirs), closed)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set_bits(self) -> int:
        return bits_of(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = []
        for i, d in enumerate(self.directions):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            out.append((a, b) if d is Step.FWD else (b, a))
        return out

    def is_sink(self, v: int) -> bool:
        """No arc of the walk leaves ``v``."""
        return all(t != v for t, _ in self.arcs())

    def is_source(self, v: int) -> bool:
        return all(h != v for _, h in self.arcs())

    def reversed(self) -> "AntidirectedWalk":
        if self.closed:
            vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
            dirs = tuple(d.flipped() for d in reversed(self.directions))
            return AntidirectedWalk(vs, dirs, True)
        return AntidirectedWalk(
            tuple(reversed(self.vertices)),
            tuple(d.flipped() for d in reversed(self.directions)),
            False,
        )

    def to_json(self) -> dict:
        return {
            "witness": list(self.vertices),
            "directions": [d.value for d in self.directions],
            "closed": self.closed,
        }


@dataclass(frozen=True)
class WalkCheck:
    """Outcome of :func:`validate_antidirected`; truthy iff the walk is valid."""

    ok: bool
    code: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_antidirected(g: OrientedGraph, walk: AntidirectedWalk) -> WalkCheck:
    """Check ``walk`` against ``g`` and report the first violated constraint.

    Failure codes: ``step_count``, ``vertex_range``, ``repeated_vertex``,
    ``too_short``, ``odd_closed``, ``missing_arc``, ``alternation``.
    """
    vs, dirs = walk.vertices, walk.directions
    expected = len(vs) if walk.closed else max(len(vs) - 1, 0)
    if len(dirs) != expected:
        return WalkCheck(False, "step_count", f"expected {expected} steps, got {len(dirs)}")
    for v in vs:
        if not 0 <= v < g.n:
            return WalkCheck(False, "vertex_range", f"vertex {v} not in graph")
    seen: set[int] = set()
    for v in vs:
        if v in seen:
            return WalkCheck(False, "repeated_vertex", f"vertex {v} repeated")
        seen.add(v)
    if walk.closed:
        if len(vs) < 3:
            return WalkCheck(False, "too_short", "closed walk needs at least 3 vertices")
        if len(vs) % 2:
            return WalkCheck(False, "odd_closed", f"closed walk has odd length {len(vs)}")
    for i, d in enumerate(dirs):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        tail, head = (a, b) if d is Step.FWD else (b, a)
        if not g.has_arc(tail, head):
            return WalkCheck(False, "missing_arc", f"step {i}: no arc {tail}->{head}")
    pairs = len(dirs) if walk.closed else len(dirs) - 1
    for i in range(pairs):
        if dirs[i] is dirs[(i + 1) % len(dirs)]:
            return WalkCheck(False, "alternation", f"steps {i} and {(i + 1) % len(dirs)} form a directed path")
    return WalkCheck(True)
