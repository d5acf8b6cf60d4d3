from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import VertexSet

__all__ = ["Partition4", "PartitionError"]


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition4:
    """Labeled split (A, B, C, D) of the vertex set; A or C may be empty."""

    a: VertexSet
    b: VertexSet
    c: VertexSet
    d: VertexSet

    def __post_init__(self) -> None:
        n = self.a.universe_n
        parts = (self.a, self.b, self.c, self.d)
        if any(p.universe_n != n for p in parts):
            raise PartitionError("parts live in different universes")
        seen = 0
        for p in parts:
            if seen & p.bits:
                raise PartitionError("parts overlap")
            seen |= p.bits
        if seen != (1 << n) - 1:
            raise PartitionError("parts do not cover the vertex set")

    @classmethod
    def from_lists(cls, n: int, a: Iterable[int], b: Iterable[int], c: Iterable[int], d: Iterable[int]) -> "Partition4":
        return cls(VertexSet.of(n, a), VertexSet.of(n, b), VertexSet.of(n, c), VertexSet.of(n, d))

    @property
    def n(self) -> int:
        return self.a.universe_n

    def part_of(self, v: int) -> str:
        for name in "abcd":
            if v in getattr(self, name):
                return name.upper()
        raise IndexError(f"vertex {v} not in partition")

    def sizes(self) -> tuple[int, int, int, int]:
        return len(self.a), len(self.b), len(self.c), len(self.d)

    def swap_ac(self) -> "Partition4":
        return Partition4(self.c, self.b, self.a, self.d)

    def to_json(self) -> dict:
        return {k.upper(): getattr(self, k).to_list() for k in "abcd"}
